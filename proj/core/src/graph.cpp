#include "raag/graph.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "raag/rng.hpp"

namespace raag {

GnpParams::GnpParams(int n_in, double p_in, std::uint64_t seed_in)
    : n(n_in), p(p_in), seed(seed_in) {
  if (n < 0) throw std::invalid_argument("GnpParams: n must be >= 0");
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument("GnpParams: p must lie in [0, 1]");
}

Graph::Graph(int n) : n_(n), words_((n + 63) / 64) {
  if (n < 0) throw std::invalid_argument("Graph: n must be >= 0");
  bits_.assign(static_cast<std::size_t>(n_) * words_, 0);
}

Graph Graph::complete(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (const auto& [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_)
    throw std::invalid_argument("Graph: vertex label " + std::to_string(v) +
                                " out of range [0, " + std::to_string(n_) + ")");
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) return false;
  return (bits_[static_cast<std::size_t>(u) * words_ + v / 64] >>
          (v % 64)) & 1u;
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("Graph: self-loops are not allowed");
  std::uint64_t& wu = bits_[static_cast<std::size_t>(u) * words_ + v / 64];
  if ((wu >> (v % 64)) & 1u) return;  // already present
  wu |= std::uint64_t{1} << (v % 64);
  bits_[static_cast<std::size_t>(v) * words_ + u / 64] |=
      std::uint64_t{1} << (u % 64);
  ++edge_count_;
}

int Graph::degree(int v) const {
  check_vertex(v);
  int d = 0;
  for (std::uint64_t w : row(v)) d += std::popcount(w);
  return d;
}

Graph sample_gnp(const GnpParams& params) {
  Graph g(params.n);
  SplitMix64 rng(params.seed);
  for (int i = 0; i < params.n; ++i) {
    for (int j = i + 1; j < params.n; ++j) {
      if (rng.next_unit() < params.p) g.add_edge(i, j);
    }
  }
  return g;
}

namespace {

void check_vertex_set(const Graph& g, const VertexSet& s) {
  int prev = -1;
  for (int v : s) {
    if (v < 0 || v >= g.vertex_count())
      throw std::invalid_argument("vertex set: label " + std::to_string(v) +
                                  " out of range");
    if (v == prev)
      throw std::invalid_argument("vertex set: duplicate label " +
                                  std::to_string(v));
    prev = v;
  }
}

}  // namespace

bool is_complete_on(const Graph& g, const VertexSet& s) {
  VertexSet sorted = s;
  std::sort(sorted.begin(), sorted.end());
  check_vertex_set(g, sorted);
  for (std::size_t i = 0; i < sorted.size(); ++i)
    for (std::size_t j = i + 1; j < sorted.size(); ++j)
      if (!g.has_edge(sorted[i], sorted[j])) return false;
  return true;
}

Graph induced_subgraph(const Graph& g, const VertexSet& s) {
  VertexSet sorted = s;
  std::sort(sorted.begin(), sorted.end());
  check_vertex_set(g, sorted);
  Graph sub(static_cast<int>(sorted.size()));
  for (std::size_t i = 0; i < sorted.size(); ++i)
    for (std::size_t j = i + 1; j < sorted.size(); ++j)
      if (g.has_edge(sorted[i], sorted[j]))
        sub.add_edge(static_cast<int>(i), static_cast<int>(j));
  return sub;
}

namespace {

[[noreturn]] void parse_fail(int line_no, const std::string& why) {
  throw std::invalid_argument("graph parse error at line " +
                              std::to_string(line_no) + ": " + why);
}

}  // namespace

Graph parse_graph(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;

  if (!std::getline(in, line)) parse_fail(1, "missing header");
  ++line_no;
  long long n = -1, m = -1;
  {
    std::istringstream hdr(line);
    std::string extra;
    if (!(hdr >> n >> m) || (hdr >> extra))
      parse_fail(line_no, "header must be exactly \"n m\"");
    if (n < 0 || m < 0) parse_fail(line_no, "negative count in header");
  }

  Graph g(static_cast<int>(n));
  long long edges_read = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() && in.eof()) break;
    if (edges_read == m) parse_fail(line_no, "more edge lines than header m");
    long long u = -1, v = -1;
    std::istringstream el(line);
    std::string extra;
    if (!(el >> u >> v) || (el >> extra))
      parse_fail(line_no, "edge line must be exactly \"u v\"");
    if (u == v) parse_fail(line_no, "self-loop");
    if (u < 0 || v < 0 || u >= n || v >= n)
      parse_fail(line_no, "vertex label out of range [0, " +
                              std::to_string(n) + ")");
    if (u > v) parse_fail(line_no, "edge must be written with u < v");
    if (g.has_edge(static_cast<int>(u), static_cast<int>(v)))
      parse_fail(line_no, "duplicate edge");
    g.add_edge(static_cast<int>(u), static_cast<int>(v));
    ++edges_read;
  }
  if (edges_read != m)
    parse_fail(line_no + 1, "expected " + std::to_string(m) +
                                " edge lines, found " +
                                std::to_string(edges_read));
  return g;
}

std::string serialize_graph(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (int u = 0; u < g.vertex_count(); ++u)
    for (int v = u + 1; v < g.vertex_count(); ++v)
      if (g.has_edge(u, v)) out << u << ' ' << v << '\n';
  return out.str();
}

Graph load_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open graph file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

void save_graph_file(const Graph& g, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << serialize_graph(g);
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace raag
