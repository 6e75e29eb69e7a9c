#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "raag/graph.hpp"

namespace raag {

enum class ExperimentKind { kBetti, kDimension, kTc, kMoment };

const char* to_string(ExperimentKind kind);

struct ExperimentConfig {
  ExperimentKind kind = ExperimentKind::kBetti;
  int n = 0;
  std::optional<double> p;  // explicit edge probability ...
  std::optional<double> c;  // ... or scaling constant, p = critical_p(n, r, c)
  int r = 2;
  double epsilon = 0.25;
  int trials = 1;
  std::uint64_t seed = 0;
  std::string graph_path;  // fixed-graph mode when non-empty
};

struct TrialRecord {
  std::uint64_t value = 0;  // b_r for betti, X for moment
  int cd = 0;
  int pair_r = 0;
};

struct TheoryValues {
  std::optional<double> lambda_n;
  std::optional<double> lambda_limit;
  std::optional<double> z;
  std::optional<std::pair<int, int>> matula_window;
  std::optional<std::pair<int, int>> tc_window;
  std::optional<double> expected_x;
  std::optional<double> second_moment_ratio;
};

struct EmpiricalStats {
  std::map<std::uint64_t, double> pmf;  // value -> relative frequency
  std::map<int, double> cd_pmf;         // tc experiments only
  double mean = 0.0;
  double variance = 0.0;                       // unbiased sample variance
  std::optional<double> second_moment;         // mean of X^2, moment kind
  std::vector<std::pair<std::string, double>> fractions;
};

struct GofStats {
  std::optional<double> tv_distance;
  std::optional<double> chi_square;
  std::optional<int> dof;
  // Desk-scale sanity flags; acceptance thresholds live with the caller.
  std::vector<std::pair<std::string, bool>> flags;
};

struct ExperimentReport {
  ExperimentConfig config;
  std::optional<double> resolved_p;
  std::string rng_algorithm;
  std::vector<TrialRecord> per_trial;
  TheoryValues theory;
  EmpiricalStats empirical;
  GofStats statistics;
  double wall_time_ms = 0.0;
};

// Trial i always draws from the RNG stream stream_seed(config.seed, i), so
// reports do not depend on the number of worker threads.  threads = 0 picks
// a sensible default.
ExperimentReport run_betti_poisson_experiment(const ExperimentConfig& config,
                                              int threads = 0);
ExperimentReport run_dimension_experiment(const ExperimentConfig& config,
                                          int threads = 0);
ExperimentReport run_tc_experiment(const ExperimentConfig& config,
                                   int threads = 0);
ExperimentReport run_moment_experiment(const ExperimentConfig& config,
                                       int threads = 0);
ExperimentReport run_experiment(const ExperimentConfig& config,
                                int threads = 0);

enum class ReportFormat { kJson, kCsv };

std::string render_report(const ExperimentReport& report, ReportFormat format);
void emit_report(const ExperimentReport& report, const std::string& path,
                 ReportFormat format);

// Goodness-of-fit helpers against Poisson(lambda).  The empirical pmf is
// taken over 0..K with K = max observed value + 10 and the remaining
// Poisson mass pooled into one final bucket.
double tv_distance_vs_poisson(const std::vector<std::uint64_t>& values,
                              double lambda);

struct ChiSquare {
  double statistic = 0.0;
  int dof = 1;
};

// Bins are pooled greedily until each carries expected count >= 5.
ChiSquare chi_square_vs_poisson(const std::vector<std::uint64_t>& values,
                                double lambda);

}  // namespace raag
