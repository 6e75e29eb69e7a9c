#include "raag/cliques.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>

namespace raag {

namespace {

using Word = std::uint64_t;

int popcount_words(const Word* w, int words) {
  int c = 0;
  for (int k = 0; k < words; ++k) c += std::popcount(w[k]);
  return c;
}

bool any_words(const Word* w, int words) {
  for (int k = 0; k < words; ++k)
    if (w[k]) return true;
  return false;
}

// dst = a & N(v) & { labels > v }
void and_neighbors_above(Word* dst, const Word* a, const Word* nv, int v,
                         int words) {
  const int wv = v >> 6;
  for (int k = 0; k < wv; ++k) dst[k] = 0;
  const int bit = v & 63;
  Word high_mask = (bit == 63) ? 0 : (~Word{0} << (bit + 1));
  dst[wv] = a[wv] & nv[wv] & high_mask;
  for (int k = wv + 1; k < words; ++k) dst[k] = a[k] & nv[k];
}

void checked_increment(std::uint64_t& c) {
  if (c == std::numeric_limits<std::uint64_t>::max())
    throw std::overflow_error("clique count exceeds 64-bit range");
  ++c;
}

// Iterate set bits in ascending order.
template <typename F>
void for_each_bit(const Word* w, int words, F f) {
  for (int k = 0; k < words; ++k) {
    Word word = w[k];
    while (word) {
      int v = k * 64 + std::countr_zero(word);
      word &= word - 1;
      f(v);
    }
  }
}

struct CountAllContext {
  const Graph& g;
  int words;
  std::vector<Word> arena;  // one candidate set per level
  std::vector<std::uint64_t> counts;

  explicit CountAllContext(const Graph& g_in)
      : g(g_in),
        words(g_in.words_per_row()),
        arena(static_cast<std::size_t>(g_in.vertex_count() + 1) * words),
        counts(static_cast<std::size_t>(g_in.vertex_count()) + 1, 0) {}

  void extend(const Word* cand, int level) {
    Word* child = arena.data() + static_cast<std::size_t>(level) * words;
    for_each_bit(cand, words, [&](int v) {
      checked_increment(counts[level]);
      and_neighbors_above(child, cand, g.row_data(v), v, words);
      if (any_words(child, words)) extend(child, level + 1);
    });
  }
};

struct CountSizeContext {
  const Graph& g;
  int words;
  int target;
  std::vector<Word> arena;
  std::uint64_t total = 0;

  CountSizeContext(const Graph& g_in, int r)
      : g(g_in),
        words(g_in.words_per_row()),
        target(r),
        arena(static_cast<std::size_t>(r + 1) * words) {}

  void extend(const Word* cand, int chosen) {
    const int need = target - chosen;
    const int avail = popcount_words(cand, words);
    if (avail < need) return;
    if (need == 1) {
      if (total > std::numeric_limits<std::uint64_t>::max() -
                      static_cast<std::uint64_t>(avail))
        throw std::overflow_error("clique count exceeds 64-bit range");
      total += static_cast<std::uint64_t>(avail);
      return;
    }
    Word* child = arena.data() + static_cast<std::size_t>(chosen) * words;
    for_each_bit(cand, words, [&](int v) {
      and_neighbors_above(child, cand, g.row_data(v), v, words);
      extend(child, chosen + 1);
    });
  }
};

std::vector<Word> full_vertex_set(int n, int words) {
  std::vector<Word> all(static_cast<std::size_t>(std::max(words, 1)), 0);
  for (int v = 0; v < n; ++v) all[v >> 6] |= Word{1} << (v & 63);
  return all;
}

// Branch and bound for maximum clique (Tomita-style): candidates are
// greedily coloured at every node and branched in decreasing colour order,
// pruning whenever depth + colour cannot beat the incumbent.
struct MaxCliqueSolver {
  const Graph& g;
  int n, words;
  int target;  // stop as soon as best >= target (0 = run to optimality)
  bool stopped = false;
  int best = 0;
  std::vector<int> current, best_set;
  std::vector<Word> cand_arena;   // per level: child candidate set
  std::vector<Word> color_arena;  // per level: Q and Qk scratch
  std::vector<int> order_arena, color_num_arena;

  MaxCliqueSolver(const Graph& g_in, int stop_at)
      : g(g_in),
        n(g_in.vertex_count()),
        words(g_in.words_per_row()),
        target(stop_at > 0 ? stop_at : n + 1) {
    const std::size_t levels = static_cast<std::size_t>(n) + 1;
    cand_arena.resize(levels * words);
    color_arena.resize(levels * 2 * words);
    order_arena.resize(levels * static_cast<std::size_t>(std::max(n, 1)));
    color_num_arena.resize(order_arena.size());
    current.reserve(n);
  }

  void expand(Word* cand, int depth) {
    Word* q = color_arena.data() + static_cast<std::size_t>(depth) * 2 * words;
    Word* qk = q + words;
    int* order =
        order_arena.data() + static_cast<std::size_t>(depth) * std::max(n, 1);
    int* colr = color_num_arena.data() +
                static_cast<std::size_t>(depth) * std::max(n, 1);

    std::copy(cand, cand + words, q);
    int m = 0;
    for (int color = 1; any_words(q, words); ++color) {
      std::copy(q, q + words, qk);
      while (any_words(qk, words)) {
        int v = -1;
        for (int k = 0; k < words; ++k)
          if (qk[k]) {
            v = k * 64 + std::countr_zero(qk[k]);
            break;
          }
        qk[v >> 6] &= ~(Word{1} << (v & 63));
        q[v >> 6] &= ~(Word{1} << (v & 63));
        order[m] = v;
        colr[m] = color;
        ++m;
        const Word* nv = g.row_data(v);
        for (int k = 0; k < words; ++k) qk[k] &= ~nv[k];
      }
    }

    Word* child = cand_arena.data() + static_cast<std::size_t>(depth) * words;
    for (int i = m - 1; i >= 0; --i) {
      if (depth + colr[i] <= best) return;
      const int v = order[i];
      const Word* nv = g.row_data(v);
      for (int k = 0; k < words; ++k) child[k] = cand[k] & nv[k];
      current.push_back(v);
      if (!any_words(child, words)) {
        if (depth + 1 > best) {
          best = depth + 1;
          best_set = current;
          if (best >= target) stopped = true;
        }
      } else {
        expand(child, depth + 1);
      }
      current.pop_back();
      if (stopped) return;
      cand[v >> 6] &= ~(Word{1} << (v & 63));
    }
  }

  VertexSet solve(std::vector<Word> initial) {
    if (any_words(initial.data(), words)) expand(initial.data(), 0);
    std::sort(best_set.begin(), best_set.end());
    return best_set;
  }
};

// Pivoted Bron-Kerbosch.
struct MaximalCliqueEnumerator {
  const Graph& g;
  int n, words;
  std::vector<Word> arena;  // per level: P, X, ext
  std::vector<int> current;
  std::vector<VertexSet> out;

  explicit MaximalCliqueEnumerator(const Graph& g_in)
      : g(g_in), n(g_in.vertex_count()), words(g_in.words_per_row()) {
    arena.resize((static_cast<std::size_t>(n) + 1) * 3 * words);
  }

  void recurse(Word* p, Word* x, int depth) {
    if (!any_words(p, words) && !any_words(x, words)) {
      VertexSet clique = {current.begin(), current.end()};
      std::sort(clique.begin(), clique.end());
      out.push_back(std::move(clique));
      return;
    }
    // Pivot: vertex of P union X with the most neighbours inside P.
    int pivot = -1, pivot_deg = -1;
    auto consider = [&](int u) {
      const Word* nu = g.row_data(u);
      int d = 0;
      for (int k = 0; k < words; ++k) d += std::popcount(p[k] & nu[k]);
      if (d > pivot_deg) {
        pivot_deg = d;
        pivot = u;
      }
    };
    for_each_bit(p, words, consider);
    for_each_bit(x, words, consider);

    Word* base = arena.data() + static_cast<std::size_t>(depth) * 3 * words;
    Word* ext = base;
    Word* child_p = base + words;
    Word* child_x = base + 2 * words;

    const Word* npivot = g.row_data(pivot);
    for (int k = 0; k < words; ++k) ext[k] = p[k] & ~npivot[k];

    for_each_bit(ext, words, [&](int v) {
      const Word* nv = g.row_data(v);
      for (int k = 0; k < words; ++k) {
        child_p[k] = p[k] & nv[k];
        child_x[k] = x[k] & nv[k];
      }
      current.push_back(v);
      recurse(child_p, child_x, depth + 1);
      current.pop_back();
      p[v >> 6] &= ~(Word{1} << (v & 63));
      x[v >> 6] |= Word{1} << (v & 63);
    });
  }
};

struct SizedCliqueVisitor {
  const Graph& g;
  int words, target;
  const std::function<bool(const VertexSet&)>& cb;
  std::vector<Word> arena;
  VertexSet path;
  bool done = false;

  SizedCliqueVisitor(const Graph& g_in, int r,
                     const std::function<bool(const VertexSet&)>& cb_in)
      : g(g_in),
        words(g_in.words_per_row()),
        target(r),
        cb(cb_in),
        arena(static_cast<std::size_t>(r + 1) * words) {
    path.reserve(r);
  }

  void extend(const Word* cand, int chosen) {
    if (done) return;
    if (popcount_words(cand, words) < target - chosen) return;
    Word* child = arena.data() + static_cast<std::size_t>(chosen) * words;
    for_each_bit(cand, words, [&](int v) {
      if (done) return;
      path.push_back(v);
      if (chosen + 1 == target) {
        if (cb(path)) done = true;
      } else {
        and_neighbors_above(child, cand, g.row_data(v), v, words);
        extend(child, chosen + 1);
      }
      path.pop_back();
    });
  }
};

}  // namespace

CliqueCountVector clique_count_vector(const Graph& g) {
  CountAllContext ctx(g);
  ctx.counts[0] = 1;
  if (g.vertex_count() > 0) {
    std::vector<Word> all = full_vertex_set(g.vertex_count(), ctx.words);
    ctx.extend(all.data(), 1);
  }
  while (ctx.counts.size() > 1 && ctx.counts.back() == 0) ctx.counts.pop_back();
  return {std::move(ctx.counts)};
}

std::uint64_t count_cliques_of_size(const Graph& g, int r) {
  if (r < 0) throw std::invalid_argument("count_cliques_of_size: r < 0");
  if (r == 0) return 1;
  if (r > g.vertex_count()) return 0;
  CountSizeContext ctx(g, r);
  std::vector<Word> all = full_vertex_set(g.vertex_count(), ctx.words);
  ctx.extend(all.data(), 0);
  return ctx.total;
}

int clique_number(const Graph& g) {
  if (g.vertex_count() == 0) return 0;
  MaxCliqueSolver solver(g, 0);
  return static_cast<int>(
      solver.solve(full_vertex_set(g.vertex_count(), g.words_per_row()))
          .size());
}

VertexSet max_clique_in_subset(const Graph& g, const VertexSet& allowed,
                               int stop_at) {
  std::vector<Word> mask(static_cast<std::size_t>(
                             std::max(g.words_per_row(), 1)),
                         0);
  for (int v : allowed) {
    if (v < 0 || v >= g.vertex_count())
      throw std::invalid_argument("max_clique_in_subset: label out of range");
    mask[v >> 6] |= Word{1} << (v & 63);
  }
  MaxCliqueSolver solver(g, stop_at);
  return solver.solve(std::move(mask));
}

std::vector<VertexSet> enumerate_maximal_cliques(const Graph& g) {
  if (g.vertex_count() == 0) return {};
  MaximalCliqueEnumerator enumerator(g);
  std::vector<Word> p = full_vertex_set(g.vertex_count(), enumerator.words);
  std::vector<Word> x(enumerator.words, 0);
  enumerator.recurse(p.data(), x.data(), 0);
  std::sort(enumerator.out.begin(), enumerator.out.end());
  return std::move(enumerator.out);
}

bool for_each_clique_of_size(
    const Graph& g, int r, const std::function<bool(const VertexSet&)>& cb) {
  if (r < 1) throw std::invalid_argument("for_each_clique_of_size: r < 1");
  if (r > g.vertex_count()) return false;
  SizedCliqueVisitor visitor(g, r, cb);
  std::vector<Word> all = full_vertex_set(g.vertex_count(), visitor.words);
  visitor.extend(all.data(), 0);
  return visitor.done;
}

DisjointPairResult max_disjoint_clique_pair(const Graph& g,
                                            int known_clique_number) {
  const int n = g.vertex_count();
  if (n <= 1) return {0, std::nullopt};

  const int w =
      known_clique_number >= 0 ? known_clique_number : clique_number(g);
  std::vector<char> in_a(static_cast<std::size_t>(n), 0);
  for (int r = std::min(w, n / 2); r >= 1; --r) {
    DisjointCliquePair witness;
    bool found = for_each_clique_of_size(g, r, [&](const VertexSet& a) {
      std::fill(in_a.begin(), in_a.end(), 0);
      for (int v : a) in_a[v] = 1;
      VertexSet rest;
      rest.reserve(n - r);
      for (int v = 0; v < n; ++v)
        if (!in_a[v]) rest.push_back(v);
      VertexSet b = max_clique_in_subset(g, rest, r);
      if (static_cast<int>(b.size()) >= r) {
        b.resize(r);
        witness = {r, a, b};
        return true;
      }
      return false;
    });
    if (found) return {r, witness};
  }
  return {0, std::nullopt};  // unreachable for n >= 2
}

std::uint64_t count_bicliques(const Graph& g, int r) {
  if (r < 1) throw std::invalid_argument("count_bicliques: r must be >= 1");
  const int n = g.vertex_count();
  if (2 * r > n) return 0;

  const int words = std::max(g.words_per_row(), 1);
  std::vector<Word> masks;  // flattened, `words` per clique
  for_each_clique_of_size(g, r, [&](const VertexSet& s) {
    const std::size_t base = masks.size();
    masks.resize(base + words, 0);
    for (int v : s) masks[base + (v >> 6)] |= Word{1} << (v & 63);
    return false;
  });

  const std::size_t m = masks.size() / words;
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < m; ++i) {
    const Word* a = masks.data() + i * words;
    for (std::size_t j = i + 1; j < m; ++j) {
      const Word* b = masks.data() + j * words;
      bool disjoint = true;
      for (int k = 0; k < words; ++k)
        if (a[k] & b[k]) {
          disjoint = false;
          break;
        }
      if (disjoint) {
        if (total > std::numeric_limits<std::uint64_t>::max() - 2)
          throw std::overflow_error("bi-clique count exceeds 64-bit range");
        total += 2;  // both orderings of the unordered pair
      }
    }
  }
  return total;
}

CliqueCountVector brute_force_clique_counts(const Graph& g) {
  const int n = g.vertex_count();
  if (n > 20)
    throw std::invalid_argument(
        "brute_force_clique_counts: refusing n > 20 (2^n subsets)");

  std::vector<std::uint32_t> nbr(static_cast<std::size_t>(n), 0);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v && g.has_edge(u, v)) nbr[u] |= std::uint32_t{1} << v;

  const std::size_t total = std::size_t{1} << n;
  std::vector<char> is_clique(total, 0);
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(n) + 1, 0);
  is_clique[0] = 1;
  counts[0] = 1;
  for (std::size_t s = 1; s < total; ++s) {
    const int v = std::bit_width(s) - 1;  // highest vertex of s
    const std::size_t rest = s & ~(std::size_t{1} << v);
    if (is_clique[rest] && (rest & ~static_cast<std::size_t>(nbr[v])) == 0) {
      is_clique[s] = 1;
      ++counts[static_cast<std::size_t>(std::popcount(s))];
    }
  }
  while (counts.size() > 1 && counts.back() == 0) counts.pop_back();
  return {std::move(counts)};
}

}  // namespace raag
