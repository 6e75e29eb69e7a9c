#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace raag {

// Vertex labels are 0-based everywhere.  A VertexSet is kept sorted
// ascending and free of duplicates by every producer in this library.
using VertexSet = std::vector<int>;

struct GnpParams {
  int n;
  double p;
  std::uint64_t seed;

  // Throws std::invalid_argument unless n >= 0 and 0 <= p <= 1.
  GnpParams(int n, double p, std::uint64_t seed);
};

// Undirected simple graph on n labelled vertices.  Adjacency is stored as n
// bit rows of ceil(n/64) words each; the matrix is symmetric with an empty
// diagonal.  Graphs are treated as immutable once built and may be shared
// read-only across threads.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  static Graph complete(int n);
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  int vertex_count() const noexcept { return n_; }
  int edge_count() const noexcept { return edge_count_; }
  int words_per_row() const noexcept { return words_; }

  bool has_edge(int u, int v) const;
  void add_edge(int u, int v);

  std::span<const std::uint64_t> row(int v) const {
    return {bits_.data() + static_cast<std::size_t>(v) * words_,
            static_cast<std::size_t>(words_)};
  }
  const std::uint64_t* row_data(int v) const {
    return bits_.data() + static_cast<std::size_t>(v) * words_;
  }
  int degree(int v) const;

  bool operator==(const Graph&) const = default;

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  int words_ = 0;
  int edge_count_ = 0;
  std::vector<std::uint64_t> bits_;
};

// G(n,p) sampler.  The C(n,2) vertex pairs are visited in row-major order
// (i < j), consuming exactly one uniform draw per pair from a SplitMix64
// stream started at params.seed.  Identical params give a bit-identical
// graph on every platform.
Graph sample_gnp(const GnpParams& params);

// True iff every pair of distinct vertices of s is adjacent (vacuously true
// for |s| <= 1).  Throws std::invalid_argument for out-of-range or
// duplicated labels.
bool is_complete_on(const Graph& g, const VertexSet& s);

// Subgraph induced on s, vertices relabelled 0..|s|-1 in ascending label
// order.
Graph induced_subgraph(const Graph& g, const VertexSet& s);

// Edge-list text format, bit-exact:
//   line 1: "n m"
//   then exactly m lines "u v" with 0 <= u < v < n, no duplicates.
// parse_graph names the offending line in every error it throws.
Graph parse_graph(const std::string& text);
std::string serialize_graph(const Graph& g);

Graph load_graph_file(const std::string& path);
void save_graph_file(const Graph& g, const std::string& path);

}  // namespace raag
