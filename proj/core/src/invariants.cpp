#include "raag/invariants.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "raag/asymptotics.hpp"

namespace raag {

BettiProfile betti_numbers(const Graph& g) {
  // The clique count vector already is the Betti profile: counts[0] = 1 and
  // counts[1] = n match b_0 and b_1, and cells in higher degree correspond
  // to complete subgraphs one-to-one.
  return {clique_count_vector(g).counts};
}

int cohomological_dimension(const Graph& g) { return clique_number(g); }

std::pair<int, int> tc_bounds(const Graph& g) {
  const int cd = clique_number(g);
  const int pair_r = max_disjoint_clique_pair(g).r;
  return {2 * pair_r + 1, 2 * cd + 1};
}

std::pair<int, int> theoretical_tc_window(int n, double p, double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 0.5))
    throw std::domain_error("theoretical_tc_window: epsilon must be in (0, 1/2)");
  const double z = z_statistic(n, p);
  const int lo = static_cast<int>(std::floor(z - epsilon));
  const int hi = static_cast<int>(std::floor(z + epsilon));
  return {2 * lo + 1, 2 * hi + 1};
}

RaagInvariants compute_invariants(const Graph& g) {
  RaagInvariants inv;
  inv.n = g.vertex_count();
  inv.edge_count = g.edge_count();
  inv.betti = betti_numbers(g);
  inv.cd = static_cast<int>(inv.betti.values.size()) - 1;
  inv.cat = inv.cd + 1;
  inv.pair_r = max_disjoint_clique_pair(g).r;
  inv.tc_lower = 2 * inv.pair_r + 1;
  inv.tc_upper = 2 * inv.cd + 1;
  return inv;
}

std::string invariants_to_json(const RaagInvariants& inv) {
  std::ostringstream out;
  out << "{\"n\": " << inv.n << ", \"edge_count\": " << inv.edge_count
      << ", \"betti\": [";
  for (std::size_t i = 0; i < inv.betti.values.size(); ++i) {
    if (i) out << ", ";
    out << inv.betti.values[i];
  }
  out << "], \"cd\": " << inv.cd << ", \"cat\": " << inv.cat
      << ", \"pair_r\": " << inv.pair_r << ", \"tc_lower\": " << inv.tc_lower
      << ", \"tc_upper\": " << inv.tc_upper << "}";
  return out.str();
}

}  // namespace raag
