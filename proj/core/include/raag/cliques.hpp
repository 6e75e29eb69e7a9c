#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "raag/graph.hpp"

namespace raag {

// counts[r] = number of complete subgraphs on exactly r vertices, all of
// them, not only maximal ones.  counts[0] = 1 for the empty set, so
// counts[1] = n and counts[2] = edge_count.  The vector is trimmed at the
// clique number.  Counts are exact; any counter about to pass 2^64 - 1
// throws std::overflow_error.
struct CliqueCountVector {
  std::vector<std::uint64_t> counts;

  int clique_number() const noexcept {
    return static_cast<int>(counts.size()) - 1;
  }
};

// Ordered pair of vertex-disjoint complete subgraphs of equal size r.
struct DisjointCliquePair {
  int r = 0;
  VertexSet first;
  VertexSet second;
};

struct DisjointPairResult {
  int r = 0;  // largest size with two disjoint r-cliques; 0 iff n <= 1
  std::optional<DisjointCliquePair> witness;
};

CliqueCountVector clique_count_vector(const Graph& g);

// Number of complete subgraphs on exactly r vertices.
std::uint64_t count_cliques_of_size(const Graph& g, int r);

// Exact maximum clique size via branch and bound with a greedy-colouring
// upper bound; 0 for the empty graph.
int clique_number(const Graph& g);

// Exact maximum clique restricted to the vertices listed in `allowed`.
// When stop_at > 0 the search returns as soon as a clique with at least
// stop_at vertices is known (the returned clique may be larger).
VertexSet max_clique_in_subset(const Graph& g, const VertexSet& allowed,
                               int stop_at = 0);

// Inclusion-maximal cliques via pivoted Bron-Kerbosch, each reported once,
// sorted lexicographically.
std::vector<VertexSet> enumerate_maximal_cliques(const Graph& g);

// Visits every r-clique in lexicographic order until the callback returns
// true; returns true iff the callback stopped the enumeration.
bool for_each_clique_of_size(const Graph& g, int r,
                             const std::function<bool(const VertexSet&)>& cb);

// Largest r admitting two vertex-disjoint r-cliques, with a witness when
// r >= 1.  Searches r downward from min(clique number, n/2); for each r it
// walks r-cliques A in lexicographic order and asks the branch-and-bound
// solver for an r-clique avoiding A; the first hit wins.  Pass the clique
// number when it is already known to skip recomputing it.
DisjointPairResult max_disjoint_clique_pair(const Graph& g,
                                            int known_clique_number = -1);

// Number of ordered pairs (S, T) of disjoint r-subsets that both induce
// complete subgraphs.  Zero when 2r > n; requires r >= 1.
std::uint64_t count_bicliques(const Graph& g, int r);

// Exhaustive oracle over all 2^n vertex subsets; refuses n > 20.
CliqueCountVector brute_force_clique_counts(const Graph& g);

}  // namespace raag
