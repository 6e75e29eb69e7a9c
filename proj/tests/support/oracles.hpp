#pragma once

// Brute-force oracles for the clique machinery and the second-moment sum.
// Everything here enumerates subsets directly and stays independent of the
// search/branch-and-bound code paths it is used to check.

#include <cstdint>
#include <vector>

#include "raag/graph.hpp"

namespace raag::testing {

// All clique vertex-masks grouped by size, via subset scan (n <= 20).
std::vector<std::vector<std::uint32_t>> clique_masks_by_size(const Graph& g);

// Largest r with two disjoint r-cliques, by scanning all mask pairs.
int bf_max_disjoint_pair(const Graph& g);

// Ordered disjoint pairs of r-clique masks.
std::uint64_t bf_count_bicliques(const Graph& g, int r);

// E(X^2)/E(X)^2 for the ordered disjoint r-pair count, by enumerating every
// ordered pair of ordered disjoint r-subset pairs of [n] and summing
// p^(edges required by the union), read off each concrete pair of pairs.
double bf_second_moment_ratio(int n, double p, int r);

// Relabelled copy of g: vertex v becomes perm[v].
Graph permuted_graph(const Graph& g, const std::vector<int>& perm);

}  // namespace raag::testing
