#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "raag/cliques.hpp"
#include "raag/graph.hpp"

namespace raag {

// Betti numbers of the flag complex of g: b_0 = 1, b_1 = n, and for r >= 2
// b_r equals the number of complete subgraphs on r vertices.  values runs
// from b_0 to b_cd where cd is the clique number.
struct BettiProfile {
  std::vector<std::uint64_t> values;
};

struct RaagInvariants {
  int n = 0;
  int edge_count = 0;
  BettiProfile betti;
  int cd = 0;        // cohomological dimension = clique number
  int cat = 1;       // LS-category = cd + 1
  int pair_r = 0;    // largest size of two disjoint cliques
  int tc_lower = 1;  // 2 * pair_r + 1
  int tc_upper = 1;  // 2 * cd + 1
};

BettiProfile betti_numbers(const Graph& g);

int cohomological_dimension(const Graph& g);

// (2 * pair_r + 1, 2 * cd + 1).  TC is non-reduced here: a point has
// TC = 1, and pair_r = 0 yields the vacuous lower bound 1.
std::pair<int, int> tc_bounds(const Graph& g);

// (2 * floor(z - eps) + 1, 2 * floor(z + eps) + 1) from the clique-number
// concentration point z(n, p); requires 0 < eps < 1/2.
std::pair<int, int> theoretical_tc_window(int n, double p, double epsilon);

RaagInvariants compute_invariants(const Graph& g);

// JSON object with keys n, edge_count, betti, cd, cat, pair_r, tc_lower,
// tc_upper, in that order.
std::string invariants_to_json(const RaagInvariants& inv);

}  // namespace raag
