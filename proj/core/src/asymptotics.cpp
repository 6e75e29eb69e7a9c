#include "raag/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace raag {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double log_binomial(int n, int r) {
  if (r < 0 || r > n) return kNegInf;
  return std::lgamma(n + 1.0) - std::lgamma(r + 1.0) -
         std::lgamma(n - r + 1.0);
}

std::int64_t choose2(std::int64_t k) { return k * (k - 1) / 2; }

// Everything the overlap-class formulas need, with lgamma evaluated once
// per distinct argument.  Multinomial logs sort their two free arguments so
// that the coordinate involutions (a<->b, c<->d) and (a<->c, b<->d) map a
// term to a bit-identical value.
struct OverlapEvaluator {
  int n, r;
  double ln_q;
  std::vector<double> lg_small;  // lgamma(k + 1), k = 0..4r+1
  std::vector<double> lg_big;    // lgamma(n - 4r + ell + 1), ell = 0..4r
  double lg_n2r;                 // lgamma(n - 2r + 1)
  double log_denom;              // ln of n! / (r! r! (n-2r)!)

  OverlapEvaluator(int n_in, double p, int r_in) : n(n_in), r(r_in) {
    if (!(p > 0.0 && p < 1.0))
      throw std::domain_error("second moment: p must lie in (0, 1)");
    if (r < 1) throw std::invalid_argument("second moment: r must be >= 1");
    if (n < 4 * r)
      throw std::domain_error("second moment: n >= 4r is required");
    ln_q = -std::log(p);
    lg_small.resize(static_cast<std::size_t>(4 * r) + 2);
    for (std::size_t k = 0; k < lg_small.size(); ++k)
      lg_small[k] = std::lgamma(static_cast<double>(k) + 1.0);
    lg_big.resize(static_cast<std::size_t>(4 * r) + 1);
    for (int ell = 0; ell <= 4 * r; ++ell)
      lg_big[ell] = std::lgamma(static_cast<double>(n - 4 * r + ell) + 1.0);
    lg_n2r = std::lgamma(static_cast<double>(n - 2 * r) + 1.0);
    log_denom = std::lgamma(n + 1.0) - 2.0 * lg_small[r] - lg_n2r;
  }

  bool in_domain(int a, int b, int c, int d) const {
    return std::max(a, d) + std::max(b, c) <= r;
  }

  double tri_r(int x, int y) const {
    auto [lo, hi] = std::minmax(x, y);
    return lg_small[r] - lg_small[lo] - lg_small[hi] - lg_small[r - x - y];
  }

  double tri_rest(int u, int v, int ell) const {
    auto [lo, hi] = std::minmax(u, v);
    return lg_n2r - lg_small[lo] - lg_small[hi] - lg_big[ell];
  }

  SecondMomentTerm term(int a, int b, int c, int d) const {
    const int ell = a + b + c + d;
    const double log_f = tri_r(a, c) + tri_r(b, d) +
                         tri_rest(r - a - b, r - c - d, ell) - log_denom;
    const std::int64_t overlap =
        choose2(a) + choose2(b) + choose2(c) + choose2(d);
    return {{a, b, c, d}, ell, overlap, log_f,
            log_f + static_cast<double>(overlap) * ln_q};
  }
};

double log_sum_exp(const std::vector<SecondMomentTerm>& terms,
                   double SecondMomentTerm::* member) {
  double m = kNegInf;
  for (const auto& t : terms) m = std::max(m, t.*member);
  double s = 0.0;
  for (const auto& t : terms) s += std::exp(t.*member - m);
  return m + std::log(s);
}

void check_domain_size(int r) {
  // Dense (r+1)^4 layouts; past this the exact machinery is hopeless anyway.
  if (static_cast<long long>(r + 1) * (r + 1) * (r + 1) * (r + 1) >
      400'000'000LL)
    throw std::invalid_argument("second moment: r is too large");
}

}  // namespace

double expected_betti(int n, double p, int r) {
  if (n < 0 || r < 0)
    throw std::invalid_argument("expected_betti: n and r must be >= 0");
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument("expected_betti: p must lie in [0, 1]");
  if (r > n) return 0.0;
  const std::int64_t pairs = choose2(r);
  if (p == 0.0) return pairs == 0 ? std::exp(log_binomial(n, r)) : 0.0;
  return std::exp(log_binomial(n, r) +
                  static_cast<double>(pairs) * std::log(p));
}

double critical_p(int n, int r, double c) {
  if (r < 2) throw std::invalid_argument("critical_p: r must be >= 2");
  if (!(c > 0.0)) throw std::invalid_argument("critical_p: c must be > 0");
  if (n < 1) throw std::invalid_argument("critical_p: n must be >= 1");
  const double p = std::pow(c / n, 2.0 / (r - 1));
  if (p > 1.0)
    throw std::domain_error("critical_p: n is too small for this c (p > 1)");
  return p;
}

double poisson_pmf(double lambda, int k) {
  if (!(lambda >= 0.0))
    throw std::invalid_argument("poisson_pmf: lambda must be >= 0");
  if (k < 0) throw std::invalid_argument("poisson_pmf: k must be >= 0");
  if (lambda == 0.0) return k == 0 ? 1.0 : 0.0;
  return std::exp(-lambda + k * std::log(lambda) - std::lgamma(k + 1.0));
}

double z_statistic(int n, double p) {
  if (!(p > 0.0 && p < 1.0))
    throw std::domain_error("z_statistic: p must lie in (0, 1)");
  if (n < 1) throw std::domain_error("z_statistic: n must be >= 1");
  const double ln_q = -std::log(p);
  const double log_q_n = std::log(static_cast<double>(n)) / ln_q;
  if (log_q_n < 1.0)
    throw std::domain_error(
        "z_statistic: log_q n < 1, the iterated logarithm is undefined");
  const double log_q_log_q_n = std::log(log_q_n) / ln_q;
  const double log_q_e_half = (1.0 - std::log(2.0)) / ln_q;
  return 2.0 * log_q_n - 2.0 * log_q_log_q_n + 2.0 * log_q_e_half + 1.0;
}

std::pair<int, int> matula_window(int n, double p, double epsilon) {
  if (!(epsilon > 0.0))
    throw std::invalid_argument("matula_window: epsilon must be > 0");
  const double z = z_statistic(n, p);
  return {static_cast<int>(std::floor(z - epsilon)),
          static_cast<int>(std::floor(z + epsilon))};
}

double lemma4_statistic(int n, double p, double epsilon) {
  const auto [r, hi] = matula_window(n, p, epsilon);
  (void)hi;
  if (r < 1)
    throw std::domain_error("lemma4_statistic: floor(z - eps) < 1");
  return std::exp(log_binomial(n, r) +
                  static_cast<double>(choose2(r)) * std::log(p) -
                  std::log(static_cast<double>(r)));
}

double expected_biclique_count(int n, double p, int r) {
  if (n < 0 || r < 0)
    throw std::invalid_argument("expected_biclique_count: negative argument");
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument("expected_biclique_count: p not in [0, 1]");
  if (2 * r > n) return 0.0;
  const double log_multinomial = std::lgamma(n + 1.0) -
                                 2.0 * std::lgamma(r + 1.0) -
                                 std::lgamma(n - 2.0 * r + 1.0);
  const std::int64_t exponent = 2 * choose2(r);
  if (p == 0.0) return exponent == 0 ? std::exp(log_multinomial) : 0.0;
  return std::exp(log_multinomial +
                  static_cast<double>(exponent) * std::log(p));
}

std::vector<SecondMomentTerm> second_moment_terms(int n, double p, int r) {
  check_domain_size(r);
  OverlapEvaluator eval(n, p, r);
  std::vector<SecondMomentTerm> terms;
  for (int a = 0; a <= r; ++a)
    for (int b = 0; b <= r; ++b)
      for (int c = 0; c <= r; ++c)
        for (int d = 0; d <= r; ++d)
          if (eval.in_domain(a, b, c, d)) terms.push_back(eval.term(a, b, c, d));
  return terms;
}

SecondMomentSummary second_moment_ratio(int n, double p, int r) {
  const auto terms = second_moment_terms(n, p, r);
  return {std::exp(log_sum_exp(terms, &SecondMomentTerm::log_t)),
          std::exp(log_sum_exp(terms, &SecondMomentTerm::log_f)),
          terms.size()};
}

F0Bound f0_bound_check(int n, int r) {
  if (r < 0) throw std::invalid_argument("f0_bound_check: r must be >= 0");
  if (n < 4 * r)
    throw std::domain_error("f0_bound_check: n >= 4r is required");
  double f0 = 1.0;
  for (int k = 0; k < 2 * r; ++k)
    f0 *= 1.0 - 2.0 * r / static_cast<double>(n - k);
  const double bound =
      1.0 - 4.0 * static_cast<double>(r) * r / (n - 2.0 * r + 1.0);
  return {f0, bound, f0 >= std::max(0.0, bound)};
}

double default_split_lambda(double p) {
  if (!(p > 0.0 && p < 1.0))
    throw std::domain_error("default_split_lambda: p must lie in (0, 1)");
  const double q = 1.0 / p;
  return std::min(0.1, 0.9 / (1.0 + std::exp(1.0) * q));
}

std::vector<TermRatioDiagnostic> term_monotonicity_diagnostic(
    int n, double p, int r, double split_lambda) {
  check_domain_size(r);
  OverlapEvaluator eval(n, p, r);
  const double q = 1.0 / p;
  if (!(split_lambda > 0.0 && split_lambda < 1.0 / (1.0 + std::exp(1.0) * q)))
    throw std::domain_error(
        "term_monotonicity_diagnostic: split_lambda must lie in "
        "(0, 1/(1 + e q))");

  const double log_q_n = std::log(static_cast<double>(n)) / eval.ln_q;
  const double small_cut = (1.0 - split_lambda) * log_q_n;
  const double large_cut = (1.0 + split_lambda) * log_q_n;
  auto classify = [&](int x) {
    if (x <= small_cut) return CoordinateClass::kSmall;
    if (x >= large_cut) return CoordinateClass::kLarge;
    return CoordinateClass::kIntermediate;
  };

  const int stride = r + 1;
  const std::size_t cells = static_cast<std::size_t>(stride) * stride *
                            stride * stride;
  std::vector<double> log_t(cells,
                            std::numeric_limits<double>::quiet_NaN());
  auto at = [&](int a, int b, int c, int d) -> double& {
    return log_t[((static_cast<std::size_t>(a) * stride + b) * stride + c) *
                     stride +
                 d];
  };
  for (int a = 0; a <= r; ++a)
    for (int b = 0; b <= r; ++b)
      for (int c = 0; c <= r; ++c)
        for (int d = 0; d <= r; ++d)
          if (eval.in_domain(a, b, c, d))
            at(a, b, c, d) = eval.term(a, b, c, d).log_t;

  std::vector<TermRatioDiagnostic> violations;
  // The two coordinates sharing a domain constraint with each coordinate.
  static constexpr int kPartner[4][2] = {{1, 2}, {0, 3}, {0, 3}, {1, 2}};

  for (int a = 0; a <= r; ++a)
    for (int b = 0; b <= r; ++b)
      for (int c = 0; c <= r; ++c)
        for (int d = 0; d <= r; ++d) {
          if (!eval.in_domain(a, b, c, d)) continue;
          const std::array<int, 4> alpha = {a, b, c, d};
          for (int i = 0; i < 4; ++i) {
            std::array<int, 4> next = alpha;
            ++next[i];
            if (next[i] > r ||
                !eval.in_domain(next[0], next[1], next[2], next[3]))
              continue;
            const double lr =
                at(next[0], next[1], next[2], next[3]) - at(a, b, c, d);
            const CoordinateClass cls = classify(alpha[i]);
            const int x = alpha[i];
            const int u = alpha[kPartner[i][0]];
            const int v = alpha[kPartner[i][1]];
            const double bound_a = static_cast<double>(r - x - u) *
                                   (r - x - v) /
                                   ((x + 1.0) * static_cast<double>(n));
            if (cls == CoordinateClass::kSmall && lr >= 0.0)
              violations.push_back({MonotonicityCheck::kSmallIncrementDecrease,
                                    alpha, i, cls, bound_a, split_lambda, lr});
            else if (cls == CoordinateClass::kLarge && lr <= 0.0)
              violations.push_back({MonotonicityCheck::kLargeIncrementIncrease,
                                    alpha, i, cls, bound_a, split_lambda, lr});
          }
        }

  // Ridge (a, 0, 0, d): interior values stay below the end values.
  for (int d = 0; r >= 2 && d <= r; ++d) {
    const double ends = std::max(at(1, 0, 0, d), at(r - 1, 0, 0, d));
    for (int a = 1; a <= r - 1; ++a) {
      const double margin = at(a, 0, 0, d) - ends;
      if (margin > 0.0) {
        const double bound_a = static_cast<double>(r - a) * (r - a) /
                               ((a + 1.0) * static_cast<double>(n));
        violations.push_back({MonotonicityCheck::kRidgeMaxBound,
                              {a, 0, 0, d},
                              -1,
                              classify(a),
                              bound_a,
                              split_lambda,
                              margin});
      }
    }
  }

  // ln T is convex in a on the intermediate stretch of the ridge.
  for (int d = 0; d <= r; ++d)
    for (int a = 0; a + 2 <= r; ++a) {
      if (classify(a) != CoordinateClass::kIntermediate ||
          classify(a + 1) != CoordinateClass::kIntermediate ||
          classify(a + 2) != CoordinateClass::kIntermediate)
        continue;
      const double margin =
          at(a, 0, 0, d) + at(a + 2, 0, 0, d) - 2.0 * at(a + 1, 0, 0, d);
      if (!(margin > 0.0)) {
        const double bound_a = static_cast<double>(r - a) * (r - a) /
                               ((a + 1.0) * static_cast<double>(n));
        violations.push_back({MonotonicityCheck::kRidgeLogConvexity,
                              {a, 0, 0, d},
                              -1,
                              CoordinateClass::kIntermediate,
                              bound_a,
                              split_lambda,
                              margin});
      }
    }

  return violations;
}

}  // namespace raag
