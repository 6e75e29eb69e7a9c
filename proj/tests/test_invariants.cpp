#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <stdexcept>

#include "oracles.hpp"
#include "raag/graph.hpp"
#include "raag/invariants.hpp"
#include "raag/rng.hpp"

using namespace raag;

namespace {

Graph four_cycle() {
  return Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
}

}  // namespace

TEST_CASE("betti numbers of small graphs") {
  Graph path3 = Graph::from_edges(3, {{0, 1}, {1, 2}});
  CHECK(betti_numbers(path3).values == std::vector<std::uint64_t>{1, 3, 2});
  CHECK(betti_numbers(Graph::complete(3)).values ==
        std::vector<std::uint64_t>{1, 3, 3, 1});
  CHECK(betti_numbers(Graph(5)).values == std::vector<std::uint64_t>{1, 5});
}

TEST_CASE("cohomological dimension") {
  for (int n : {1, 3, 6}) CHECK(cohomological_dimension(Graph::complete(n)) == n);
  CHECK(cohomological_dimension(Graph(4)) == 1);
  CHECK(cohomological_dimension(four_cycle()) == 2);
}

TEST_CASE("tc bounds on the pinned examples") {
  CHECK(tc_bounds(four_cycle()) == std::pair{5, 5});
  CHECK(tc_bounds(Graph(2)) == std::pair{3, 3});
  CHECK(tc_bounds(Graph(1)) == std::pair{1, 3});
}

TEST_CASE("theoretical tc window") {
  CHECK(theoretical_tc_window(200, 0.5, 0.25) == std::pair{23, 23});
  CHECK(theoretical_tc_window(200, 0.5, 0.45) == std::pair{21, 23});
  CHECK_THROWS_AS(theoretical_tc_window(200, 0.5, 0.5), std::domain_error);
  CHECK_THROWS_AS(theoretical_tc_window(200, 0.5, 0.0), std::domain_error);
  for (int n : {50, 200, 1000})
    for (double eps : {0.05, 0.25, 0.45}) {
      const auto [lo, hi] = theoretical_tc_window(n, 0.5, eps);
      const int gap = hi - lo;
      CHECK((gap == 0 || gap == 2 || gap == 4));
    }
}

TEST_CASE("full invariants record") {
  Graph g = sample_gnp(GnpParams(12, 0.5, 5));
  const RaagInvariants inv = compute_invariants(g);
  CHECK(inv.n == 12);
  CHECK(inv.edge_count == g.edge_count());
  CHECK(inv.betti.values[0] == 1);
  CHECK(inv.betti.values[1] == 12);
  CHECK(inv.betti.values[2] == static_cast<std::uint64_t>(g.edge_count()));
  CHECK(inv.cd == cohomological_dimension(g));
  CHECK(inv.cat == inv.cd + 1);
  CHECK(inv.betti.values.back() >= 1);  // betti[cd] >= 1
  CHECK(inv.tc_lower == 2 * inv.pair_r + 1);
  CHECK(inv.tc_upper == 2 * inv.cd + 1);
  CHECK(inv.tc_lower <= inv.tc_upper);
}

TEST_CASE("invariants are preserved under relabelling") {
  Graph g = sample_gnp(GnpParams(11, 0.45, 17));
  std::vector<int> perm(11);
  std::iota(perm.begin(), perm.end(), 0);
  // A fixed scramble.
  std::swap(perm[0], perm[7]);
  std::swap(perm[2], perm[9]);
  std::swap(perm[4], perm[10]);
  Graph h = raag::testing::permuted_graph(g, perm);

  const RaagInvariants a = compute_invariants(g);
  const RaagInvariants b = compute_invariants(h);
  CHECK(a.betti.values == b.betti.values);
  CHECK(a.cd == b.cd);
  CHECK(a.cat == b.cat);
  CHECK(a.pair_r == b.pair_r);
  CHECK(a.tc_lower == b.tc_lower);
  CHECK(a.tc_upper == b.tc_upper);
}

TEST_CASE("invariants serialize to the documented JSON shape") {
  const std::string json = invariants_to_json(compute_invariants(four_cycle()));
  CHECK(json ==
        "{\"n\": 4, \"edge_count\": 4, \"betti\": [1, 4, 4], \"cd\": 2, "
        "\"cat\": 3, \"pair_r\": 2, \"tc_lower\": 5, \"tc_upper\": 5}");
}
