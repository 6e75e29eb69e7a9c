#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

namespace raag {

// Closed-form quantities for G(n, p) and the associated group invariants.
// Every factorial-like value is evaluated as a natural log via lgamma and
// sums over the overlap domain use max-shifted log-sum-exp, because the
// individual factors overflow doubles long before the quantities of
// interest do.

// E(b_r) = C(n, r) * p^C(r, 2).  Returns 0 when r > n.
double expected_betti(int n, double p, int r);

// The edge probability p = (c / n)^(2 / (r - 1)) that keeps
// n * p^((r-1)/2) = c at finite n.  Throws std::domain_error when the
// result would exceed 1.
double critical_p(int n, int r, double c);

double poisson_pmf(double lambda, int k);

// Clique-number concentration point
//   z(n, p) = 2 log_q n - 2 log_q log_q n + 2 log_q(e / 2) + 1,  q = 1/p.
// Requires 0 < p < 1 and log_q n >= 1.
double z_statistic(int n, double p);

// (floor(z - eps), floor(z + eps)); any eps > 0 is accepted, the ends
// differ by at most 1 whenever eps < 1/2.
std::pair<int, int> matula_window(int n, double p, double epsilon);

// r^-1 * C(n, r) * p^C(r, 2) at r = floor(z - eps).
double lemma4_statistic(int n, double p, double epsilon);

// E(X) for the count X of ordered disjoint r-clique pairs:
// n! / (r! r! (n-2r)!) * p^(2 C(r, 2)).  Returns 0 when 2r > n.
double expected_biclique_count(int n, double p, int r);

// One overlap class alpha = (a, b, c, d) of the second-moment sum:
// a = |S cap S'|, b = |T cap S'|, c = |S cap T'|, d = |T cap T'| for two
// ordered disjoint pairs (S, T), (S', T') of r-subsets.
struct SecondMomentTerm {
  std::array<int, 4> alpha;
  int ell;                         // a + b + c + d
  std::int64_t overlap_edges;      // L = C(a,2)+C(b,2)+C(c,2)+C(d,2)
  double log_f;                    // ln F_alpha
  double log_t;                    // ln T_alpha = ln F_alpha + L ln q
};

// All terms over the domain max(a,d) + max(b,c) <= r, in lexicographic
// (a, b, c, d) order.  Requires 0 < p < 1, r >= 1 and n >= 4r.
std::vector<SecondMomentTerm> second_moment_terms(int n, double p, int r);

struct SecondMomentSummary {
  double ratio;   // E(X^2) / E(X)^2 = sum of T_alpha
  double f_sum;   // sum of F_alpha, equals 1 up to floating-point error
  std::size_t term_count;
};

SecondMomentSummary second_moment_ratio(int n, double p, int r);

struct F0Bound {
  double f0;     // product_{k=0}^{2r-1} (1 - 2r / (n - k))
  double bound;  // 1 - 4 r^2 / (n - 2r + 1)
  bool holds;    // f0 >= max(0, bound)
};

F0Bound f0_bound_check(int n, int r);

enum class CoordinateClass { kSmall, kIntermediate, kLarge };

enum class MonotonicityCheck {
  kSmallIncrementDecrease,  // T must drop when a small coordinate grows by 1
  kLargeIncrementIncrease,  // T must grow when a large coordinate grows by 1
  kRidgeMaxBound,           // T(a,0,0,d) <= max(T(1,0,0,d), T(r-1,0,0,d))
  kRidgeLogConvexity,       // T(a) T(a+2) > T(a+1)^2 on the intermediate ridge
};

struct TermRatioDiagnostic {
  MonotonicityCheck kind;
  std::array<int, 4> alpha;
  int incremented_coordinate;   // -1 for the two ridge checks
  CoordinateClass ratio_class;
  double ratio_bound_a;         // (r - x - u)(r - x - v) / ((x + 1) n)
  double split_lambda;
  double log_ratio;             // observed ln(T_after / T_before) or convexity margin
};

// Scans every alpha in the domain and every legal coordinate increment and
// records each breach of the predicted T_alpha behaviour.  Coordinate
// values x are "small" when x <= (1 - lambda) log_q n, "large" when
// x >= (1 + lambda) log_q n, and "intermediate" strictly between; the
// predicted directions only take hold for large n, so callers should treat
// the output as a report, not an assertion.  Requires
// 0 < split_lambda < 1 / (1 + e q) and n >= 4r.
std::vector<TermRatioDiagnostic> term_monotonicity_diagnostic(
    int n, double p, int r, double split_lambda);

// min(0.1, 0.9 / (1 + e q)): valid for every q > 1.
double default_split_lambda(double p);

}  // namespace raag
