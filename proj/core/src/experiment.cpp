#include "raag/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <functional>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "raag/asymptotics.hpp"
#include "raag/cliques.hpp"
#include "raag/invariants.hpp"
#include "raag/rng.hpp"

namespace raag {

const char* to_string(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::kBetti: return "betti";
    case ExperimentKind::kDimension: return "dimension";
    case ExperimentKind::kTc: return "tc";
    case ExperimentKind::kMoment: return "moment";
  }
  return "?";
}

namespace {

using ordered_json = nlohmann::ordered_json;

struct Prepared {
  std::optional<double> p;  // sampling probability, empty in fixed-graph mode
  std::optional<Graph> fixed;
};

Prepared prepare(const ExperimentConfig& cfg) {
  if (cfg.trials < 1)
    throw std::invalid_argument("experiment: trials must be >= 1");
  Prepared prep;
  if (!cfg.graph_path.empty()) {
    prep.fixed = load_graph_file(cfg.graph_path);
    if (cfg.p) prep.p = *cfg.p;
    return prep;
  }
  if (cfg.n < 0) throw std::invalid_argument("experiment: n must be >= 0");
  if (cfg.p.has_value() == cfg.c.has_value())
    throw std::invalid_argument(
        "experiment: exactly one of p and c must be given");
  if (cfg.p) {
    if (!(*cfg.p >= 0.0 && *cfg.p <= 1.0))
      throw std::invalid_argument("experiment: p must lie in [0, 1]");
    prep.p = *cfg.p;
  } else {
    prep.p = critical_p(cfg.n, cfg.r, *cfg.c);
  }
  return prep;
}

void run_trials(const ExperimentConfig& cfg, const Prepared& prep, int threads,
                std::vector<TrialRecord>& records,
                const std::function<TrialRecord(const Graph&)>& per_trial) {
  records.assign(static_cast<std::size_t>(cfg.trials), {});
  auto work_one = [&](int i) {
    if (prep.fixed) {
      records[i] = per_trial(*prep.fixed);
    } else {
      Graph g = sample_gnp(GnpParams(cfg.n, *prep.p, stream_seed(cfg.seed, i)));
      records[i] = per_trial(g);
    }
  };
  if (threads <= 0) {
    const unsigned hw = std::thread::hardware_concurrency();
    threads = static_cast<int>(hw == 0 ? 1 : hw);
  }
  threads = std::min(threads, cfg.trials);
  if (threads <= 1) {
    for (int i = 0; i < cfg.trials; ++i) work_one(i);
    return;
  }
  std::atomic<int> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (int t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      try {
        for (int i = next.fetch_add(1);
             i < cfg.trials && !failed.load(std::memory_order_relaxed);
             i = next.fetch_add(1))
          work_one(i);
      } catch (...) {
        std::scoped_lock lock(error_mutex);
        if (!error) error = std::current_exception();
        failed.store(true, std::memory_order_relaxed);
      }
    });
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

// Sample mean / unbiased variance of a projection, reduced in trial order.
template <typename Proj>
std::pair<double, double> mean_variance(const std::vector<TrialRecord>& rec,
                                        Proj proj) {
  const double t = static_cast<double>(rec.size());
  double sum = 0.0;
  for (const auto& r : rec) sum += static_cast<double>(proj(r));
  const double mean = sum / t;
  if (rec.size() < 2) return {mean, 0.0};
  double ss = 0.0;
  for (const auto& r : rec) {
    const double d = static_cast<double>(proj(r)) - mean;
    ss += d * d;
  }
  return {mean, ss / (t - 1.0)};
}

template <typename Proj>
std::map<std::uint64_t, double> sparse_pmf(const std::vector<TrialRecord>& rec,
                                           Proj proj) {
  std::map<std::uint64_t, std::uint64_t> counts;
  for (const auto& r : rec) ++counts[static_cast<std::uint64_t>(proj(r))];
  std::map<std::uint64_t, double> pmf;
  for (const auto& [v, c] : counts)
    pmf[v] = static_cast<double>(c) / static_cast<double>(rec.size());
  return pmf;
}

void fill_common_theory(const ExperimentConfig& cfg, const Prepared& prep,
                        ExperimentReport& rep) {
  rep.resolved_p = prep.p;
  rep.rng_algorithm = kRngAlgorithm;
  if (!prep.p) return;
  const double p = *prep.p;
  const int n = prep.fixed ? prep.fixed->vertex_count() : cfg.n;
  try {
    rep.theory.z = z_statistic(n, p);
    rep.theory.matula_window = matula_window(n, p, cfg.epsilon);
    rep.theory.tc_window = theoretical_tc_window(n, p, cfg.epsilon);
  } catch (const std::exception&) {
    // Outside the z(n, p) domain; leave the windows empty.
  }
}

ExperimentReport finish(ExperimentReport rep,
                        std::chrono::steady_clock::time_point t0) {
  rep.wall_time_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                t0)
          .count();
  return rep;
}

double fraction(const std::vector<TrialRecord>& rec,
                const std::function<bool(const TrialRecord&)>& pred) {
  std::size_t hits = 0;
  for (const auto& r : rec) hits += pred(r) ? 1 : 0;
  return static_cast<double>(hits) / static_cast<double>(rec.size());
}

}  // namespace

double tv_distance_vs_poisson(const std::vector<std::uint64_t>& values,
                              double lambda) {
  if (values.empty()) throw std::invalid_argument("tv: no samples");
  const std::uint64_t max_obs =
      *std::max_element(values.begin(), values.end());
  if (max_obs > 20'000'000)
    throw std::invalid_argument("tv: empirical support too large");
  const std::uint64_t k_max = max_obs + 10;
  std::vector<double> emp(static_cast<std::size_t>(k_max) + 1, 0.0);
  for (std::uint64_t v : values) emp[v] += 1.0 / static_cast<double>(values.size());
  double tv = 0.0;
  double seen = 0.0;
  for (std::uint64_t k = 0; k <= k_max; ++k) {
    const double pk = poisson_pmf(lambda, static_cast<int>(k));
    seen += pk;
    tv += std::abs(emp[k] - pk);
  }
  tv += std::max(0.0, 1.0 - seen);  // Poisson mass beyond the last bucket
  return 0.5 * tv;
}

ChiSquare chi_square_vs_poisson(const std::vector<std::uint64_t>& values,
                                double lambda) {
  if (values.empty()) throw std::invalid_argument("chi-square: no samples");
  const double t = static_cast<double>(values.size());
  const std::uint64_t max_obs =
      *std::max_element(values.begin(), values.end());
  if (max_obs > 20'000'000)
    throw std::invalid_argument("chi-square: empirical support too large");
  const std::uint64_t k_max = max_obs + 10;

  std::vector<double> observed(static_cast<std::size_t>(k_max) + 2, 0.0);
  std::vector<double> expected(static_cast<std::size_t>(k_max) + 2, 0.0);
  for (std::uint64_t v : values) observed[v] += 1.0;
  double seen = 0.0;
  for (std::uint64_t k = 0; k <= k_max; ++k) {
    const double pk = poisson_pmf(lambda, static_cast<int>(k));
    expected[k] = t * pk;
    seen += pk;
  }
  expected[k_max + 1] = t * std::max(0.0, 1.0 - seen);  // pooled tail

  // Merge adjacent bins until each pooled bin expects at least 5.
  std::vector<std::pair<double, double>> bins;  // (observed, expected)
  double o_acc = 0.0, e_acc = 0.0;
  for (std::size_t k = 0; k < observed.size(); ++k) {
    o_acc += observed[k];
    e_acc += expected[k];
    if (e_acc >= 5.0) {
      bins.emplace_back(o_acc, e_acc);
      o_acc = e_acc = 0.0;
    }
  }
  if (e_acc > 0.0 || o_acc > 0.0) {
    if (!bins.empty()) {
      bins.back().first += o_acc;
      bins.back().second += e_acc;
    } else {
      bins.emplace_back(o_acc, e_acc);
    }
  }

  ChiSquare out;
  out.statistic = 0.0;
  for (const auto& [o, e] : bins)
    if (e > 0.0) out.statistic += (o - e) * (o - e) / e;
  out.dof = std::max(1, static_cast<int>(bins.size()) - 1);
  return out;
}

ExperimentReport run_betti_poisson_experiment(const ExperimentConfig& cfg,
                                              int threads) {
  const auto t0 = std::chrono::steady_clock::now();
  if (cfg.r < 2)
    throw std::invalid_argument("betti experiment: r must be >= 2");
  Prepared prep = prepare(cfg);
  ExperimentReport rep;
  rep.config = cfg;
  fill_common_theory(cfg, prep, rep);

  run_trials(cfg, prep, threads, rep.per_trial, [&](const Graph& g) {
    TrialRecord r;
    r.value = count_cliques_of_size(g, cfg.r);
    return r;
  });

  const int n = prep.fixed ? prep.fixed->vertex_count() : cfg.n;
  if (prep.p) {
    const double p = *prep.p;
    rep.theory.lambda_n = expected_betti(n, p, cfg.r);
    // Limit mean c^r / r! with c read off from n p^((r-1)/2).
    const double c_eff =
        cfg.c ? *cfg.c : n * std::pow(p, (cfg.r - 1) / 2.0);
    rep.theory.lambda_limit =
        std::exp(cfg.r * std::log(c_eff) - std::lgamma(cfg.r + 1.0));
  }

  rep.empirical.pmf = sparse_pmf(rep.per_trial, [](const TrialRecord& r) {
    return r.value;
  });
  std::tie(rep.empirical.mean, rep.empirical.variance) =
      mean_variance(rep.per_trial, [](const TrialRecord& r) { return r.value; });
  rep.empirical.fractions.emplace_back(
      "p_zero", fraction(rep.per_trial, [](const TrialRecord& r) {
        return r.value == 0;
      }));

  if (rep.theory.lambda_n) {
    std::vector<std::uint64_t> values;
    values.reserve(rep.per_trial.size());
    for (const auto& r : rep.per_trial) values.push_back(r.value);
    try {
      rep.statistics.tv_distance =
          tv_distance_vs_poisson(values, *rep.theory.lambda_n);
      const ChiSquare cs = chi_square_vs_poisson(values, *rep.theory.lambda_n);
      rep.statistics.chi_square = cs.statistic;
      rep.statistics.dof = cs.dof;
    } catch (const std::invalid_argument&) {
      // Observed values far outside any Poisson regime; skip the fit stats.
    }
  }
  double pmf_sum = 0.0;
  for (const auto& [v, f] : rep.empirical.pmf) pmf_sum += f;
  rep.statistics.flags.emplace_back("empirical_pmf_normalized",
                                    std::abs(pmf_sum - 1.0) <= 1e-12);
  return finish(std::move(rep), t0);
}

ExperimentReport run_dimension_experiment(const ExperimentConfig& cfg,
                                          int threads) {
  const auto t0 = std::chrono::steady_clock::now();
  Prepared prep = prepare(cfg);
  ExperimentReport rep;
  rep.config = cfg;
  fill_common_theory(cfg, prep, rep);

  run_trials(cfg, prep, threads, rep.per_trial, [&](const Graph& g) {
    TrialRecord r;
    r.cd = clique_number(g);
    return r;
  });

  rep.empirical.pmf = sparse_pmf(rep.per_trial, [](const TrialRecord& r) {
    return r.cd;
  });
  std::tie(rep.empirical.mean, rep.empirical.variance) =
      mean_variance(rep.per_trial, [](const TrialRecord& r) { return r.cd; });

  double in_window = 0.0;
  if (rep.theory.matula_window) {
    const auto [lo, hi] = *rep.theory.matula_window;
    in_window = fraction(rep.per_trial, [&](const TrialRecord& r) {
      return r.cd >= lo && r.cd <= hi;
    });
    rep.empirical.fractions.emplace_back("in_window", in_window);
    rep.empirical.fractions.emplace_back("outside_window", 1.0 - in_window);
  }
  // Mass of the two most frequent clique-number values.
  {
    std::vector<std::pair<double, std::uint64_t>> by_freq;
    for (const auto& [v, f] : rep.empirical.pmf) by_freq.emplace_back(f, v);
    std::sort(by_freq.begin(), by_freq.end(), [](const auto& a, const auto& b) {
      if (a.first != b.first) return a.first > b.first;
      return a.second < b.second;
    });
    double mass = 0.0;
    for (std::size_t i = 0; i < by_freq.size() && i < 2; ++i)
      mass += by_freq[i].first;
    rep.empirical.fractions.emplace_back("two_point_mass", mass);
  }
  if (rep.theory.matula_window) {
    double outside = 1.0 - in_window;
    rep.statistics.flags.emplace_back(
        "fractions_partition", std::abs(in_window + outside - 1.0) <= 1e-12);
  }
  return finish(std::move(rep), t0);
}

ExperimentReport run_tc_experiment(const ExperimentConfig& cfg, int threads) {
  const auto t0 = std::chrono::steady_clock::now();
  Prepared prep = prepare(cfg);
  ExperimentReport rep;
  rep.config = cfg;
  fill_common_theory(cfg, prep, rep);

  run_trials(cfg, prep, threads, rep.per_trial, [&](const Graph& g) {
    TrialRecord r;
    r.cd = clique_number(g);
    r.pair_r = max_disjoint_clique_pair(g, r.cd).r;
    return r;
  });

  rep.empirical.pmf = sparse_pmf(rep.per_trial, [](const TrialRecord& r) {
    return r.pair_r;
  });
  {
    std::map<int, std::uint64_t> counts;
    for (const auto& r : rep.per_trial) ++counts[r.cd];
    for (const auto& [v, c] : counts)
      rep.empirical.cd_pmf[v] =
          static_cast<double>(c) / static_cast<double>(rep.per_trial.size());
  }
  std::tie(rep.empirical.mean, rep.empirical.variance) = mean_variance(
      rep.per_trial, [](const TrialRecord& r) { return r.pair_r; });

  const bool all_ordered = fraction(rep.per_trial, [](const TrialRecord& r) {
                             return 2 * r.pair_r + 1 <= 2 * r.cd + 1;
                           }) == 1.0;
  rep.empirical.fractions.emplace_back(
      "tc_lower_le_upper", fraction(rep.per_trial, [](const TrialRecord& r) {
        return 2 * r.pair_r + 1 <= 2 * r.cd + 1;
      }));
  if (rep.theory.z) {
    const int z_lo = static_cast<int>(std::floor(*rep.theory.z - cfg.epsilon));
    const int z_hi = static_cast<int>(std::floor(*rep.theory.z + cfg.epsilon));
    rep.empirical.fractions.emplace_back(
        "upper_in_window", fraction(rep.per_trial, [&](const TrialRecord& r) {
          return 2 * r.cd + 1 <= 2 * z_hi + 1;
        }));
    rep.empirical.fractions.emplace_back(
        "lower_in_window", fraction(rep.per_trial, [&](const TrialRecord& r) {
          return 2 * r.pair_r + 1 >= 2 * z_lo + 1;
        }));
    // Desk-scale proxy: the lower window relaxed by one clique size.
    rep.empirical.fractions.emplace_back(
        "lower_relaxed_in_window",
        fraction(rep.per_trial, [&](const TrialRecord& r) {
          return r.pair_r >= z_lo - 1;
        }));
  }
  rep.statistics.flags.emplace_back("tc_lower_le_upper_all_trials",
                                    all_ordered);
  return finish(std::move(rep), t0);
}

ExperimentReport run_moment_experiment(const ExperimentConfig& cfg,
                                       int threads) {
  const auto t0 = std::chrono::steady_clock::now();
  if (cfg.r < 1)
    throw std::invalid_argument("moment experiment: r must be >= 1");
  Prepared prep = prepare(cfg);
  ExperimentReport rep;
  rep.config = cfg;
  fill_common_theory(cfg, prep, rep);

  run_trials(cfg, prep, threads, rep.per_trial, [&](const Graph& g) {
    TrialRecord r;
    r.value = count_bicliques(g, cfg.r);
    return r;
  });

  const int n = prep.fixed ? prep.fixed->vertex_count() : cfg.n;
  if (prep.p) {
    rep.theory.expected_x = expected_biclique_count(n, *prep.p, cfg.r);
    try {
      rep.theory.second_moment_ratio =
          second_moment_ratio(n, *prep.p, cfg.r).ratio;
    } catch (const std::exception&) {
      // n < 4r or p outside (0, 1); the exact ratio is not defined there.
    }
  }

  rep.empirical.pmf = sparse_pmf(rep.per_trial, [](const TrialRecord& r) {
    return r.value;
  });
  std::tie(rep.empirical.mean, rep.empirical.variance) =
      mean_variance(rep.per_trial, [](const TrialRecord& r) { return r.value; });
  const double t = static_cast<double>(rep.per_trial.size());
  double m2 = 0.0, m3 = 0.0, m4 = 0.0;
  for (const auto& r : rep.per_trial) {
    const double x = static_cast<double>(r.value);
    m2 += x * x;
    m3 += x * x * x;
    m4 += x * x * x * x;
  }
  m2 /= t;
  m3 /= t;
  m4 /= t;
  rep.empirical.second_moment = m2;

  const double p_positive = fraction(rep.per_trial, [](const TrialRecord& r) {
    return r.value > 0;
  });
  rep.empirical.fractions.emplace_back("x_positive", p_positive);

  // Second-moment lower bound (sample mean)^2 / (sample second moment) and
  // its standard error by the delta method.
  bool bound_ok = true;
  if (m2 > 0.0) {
    const double m1 = rep.empirical.mean;
    const double bound = m1 * m1 / m2;
    const double var_m1 = std::max(0.0, m2 - m1 * m1) / t;
    const double var_m2 = std::max(0.0, m4 - m2 * m2) / t;
    const double cov = (m3 - m1 * m2) / t;
    const double gx = 2.0 * m1 / m2;
    const double gy = -m1 * m1 / (m2 * m2);
    const double se2 =
        gx * gx * var_m1 + gy * gy * var_m2 + 2.0 * gx * gy * cov;
    const double se = std::sqrt(std::max(0.0, se2));
    bound_ok = p_positive >= bound - 4.0 * se;
    rep.empirical.fractions.emplace_back("second_moment_lower_bound", bound);
  }
  rep.statistics.flags.emplace_back("p_positive_ge_second_moment_bound",
                                    bound_ok);
  return finish(std::move(rep), t0);
}

ExperimentReport run_experiment(const ExperimentConfig& cfg, int threads) {
  switch (cfg.kind) {
    case ExperimentKind::kBetti:
      return run_betti_poisson_experiment(cfg, threads);
    case ExperimentKind::kDimension:
      return run_dimension_experiment(cfg, threads);
    case ExperimentKind::kTc:
      return run_tc_experiment(cfg, threads);
    case ExperimentKind::kMoment:
      return run_moment_experiment(cfg, threads);
  }
  throw std::invalid_argument("experiment: unknown kind");
}

namespace {

ordered_json config_json(const ExperimentReport& rep) {
  const auto& cfg = rep.config;
  ordered_json j;
  j["kind"] = to_string(cfg.kind);
  j["n"] = cfg.n;
  if (rep.resolved_p)
    j["p"] = *rep.resolved_p;
  else
    j["p"] = nullptr;
  if (cfg.c)
    j["c"] = *cfg.c;
  else
    j["c"] = nullptr;
  j["r"] = cfg.r;
  j["epsilon"] = cfg.epsilon;
  j["trials"] = cfg.trials;
  j["seed"] = cfg.seed;
  if (cfg.graph_path.empty())
    j["graph"] = nullptr;
  else
    j["graph"] = cfg.graph_path;
  return j;
}

template <typename T>
ordered_json opt_json(const std::optional<T>& v) {
  if (!v) return nullptr;
  return *v;
}

ordered_json window_json(const std::optional<std::pair<int, int>>& w) {
  if (!w) return nullptr;
  return ordered_json::array({w->first, w->second});
}

}  // namespace

std::string render_report(const ExperimentReport& rep, ReportFormat format) {
  if (format == ReportFormat::kJson) {
    ordered_json j;
    j["config"] = config_json(rep);
    j["rng_algorithm"] = rep.rng_algorithm;
    ordered_json theory;
    theory["lambda_n"] = opt_json(rep.theory.lambda_n);
    theory["lambda_limit"] = opt_json(rep.theory.lambda_limit);
    theory["z"] = opt_json(rep.theory.z);
    theory["matula_window"] = window_json(rep.theory.matula_window);
    theory["tc_window"] = window_json(rep.theory.tc_window);
    theory["expected_x"] = opt_json(rep.theory.expected_x);
    theory["second_moment_ratio"] = opt_json(rep.theory.second_moment_ratio);
    j["theory"] = theory;
    ordered_json emp;
    ordered_json pmf = ordered_json::object();
    for (const auto& [v, f] : rep.empirical.pmf) pmf[std::to_string(v)] = f;
    emp["pmf"] = pmf;
    if (!rep.empirical.cd_pmf.empty()) {
      ordered_json cd_pmf = ordered_json::object();
      for (const auto& [v, f] : rep.empirical.cd_pmf)
        cd_pmf[std::to_string(v)] = f;
      emp["cd_pmf"] = cd_pmf;
    }
    emp["mean"] = rep.empirical.mean;
    emp["variance"] = rep.empirical.variance;
    if (rep.empirical.second_moment)
      emp["second_moment"] = *rep.empirical.second_moment;
    ordered_json fractions = ordered_json::object();
    for (const auto& [k, v] : rep.empirical.fractions) fractions[k] = v;
    emp["fractions"] = fractions;
    j["empirical"] = emp;
    ordered_json stats;
    stats["tv_distance"] = opt_json(rep.statistics.tv_distance);
    stats["chi_square"] = opt_json(rep.statistics.chi_square);
    stats["dof"] = opt_json(rep.statistics.dof);
    ordered_json flags = ordered_json::object();
    for (const auto& [k, v] : rep.statistics.flags) flags[k] = v;
    stats["flags"] = flags;
    j["statistics"] = stats;
    j["wall_time_ms"] = rep.wall_time_ms;
    return j.dump(2) + "\n";
  }

  // CSV: "#"-prefixed summary block, then one row per trial.
  std::ostringstream out;
  char buf[64];
  auto num = [&](double v) {
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return std::string(buf);
  };
  auto opt_num = [&](const std::optional<double>& v) {
    return v ? num(*v) : std::string("");
  };
  const auto& cfg = rep.config;
  out << "# kind," << to_string(cfg.kind) << '\n';
  out << "# n," << cfg.n << '\n';
  out << "# p," << (rep.resolved_p ? num(*rep.resolved_p) : "") << '\n';
  out << "# c," << (cfg.c ? num(*cfg.c) : "") << '\n';
  out << "# r," << cfg.r << '\n';
  out << "# epsilon," << num(cfg.epsilon) << '\n';
  out << "# trials," << cfg.trials << '\n';
  out << "# seed," << cfg.seed << '\n';
  out << "# graph," << cfg.graph_path << '\n';
  out << "# rng_algorithm," << rep.rng_algorithm << '\n';
  out << "# lambda_n," << opt_num(rep.theory.lambda_n) << '\n';
  out << "# lambda_limit," << opt_num(rep.theory.lambda_limit) << '\n';
  out << "# z," << opt_num(rep.theory.z) << '\n';
  if (rep.theory.matula_window)
    out << "# matula_window," << rep.theory.matula_window->first << ';'
        << rep.theory.matula_window->second << '\n';
  else
    out << "# matula_window,\n";
  if (rep.theory.tc_window)
    out << "# tc_window," << rep.theory.tc_window->first << ';'
        << rep.theory.tc_window->second << '\n';
  else
    out << "# tc_window,\n";
  out << "# expected_x," << opt_num(rep.theory.expected_x) << '\n';
  out << "# second_moment_ratio," << opt_num(rep.theory.second_moment_ratio)
      << '\n';
  out << "# mean," << num(rep.empirical.mean) << '\n';
  out << "# variance," << num(rep.empirical.variance) << '\n';
  if (rep.empirical.second_moment)
    out << "# second_moment," << num(*rep.empirical.second_moment) << '\n';
  for (const auto& [k, v] : rep.empirical.fractions)
    out << "# fraction_" << k << ',' << num(v) << '\n';
  out << "# tv_distance," << opt_num(rep.statistics.tv_distance) << '\n';
  out << "# chi_square," << opt_num(rep.statistics.chi_square) << '\n';
  out << "# dof,"
      << (rep.statistics.dof ? std::to_string(*rep.statistics.dof) : "")
      << '\n';
  for (const auto& [k, v] : rep.statistics.flags)
    out << "# flag_" << k << ',' << (v ? "true" : "false") << '\n';
  out << "# wall_time_ms," << num(rep.wall_time_ms) << '\n';

  switch (cfg.kind) {
    case ExperimentKind::kBetti:
      out << "trial,b_r\n";
      for (std::size_t i = 0; i < rep.per_trial.size(); ++i)
        out << i << ',' << rep.per_trial[i].value << '\n';
      break;
    case ExperimentKind::kDimension:
      out << "trial,cd\n";
      for (std::size_t i = 0; i < rep.per_trial.size(); ++i)
        out << i << ',' << rep.per_trial[i].cd << '\n';
      break;
    case ExperimentKind::kTc:
      out << "trial,pair_r,cd,tc_lower,tc_upper\n";
      for (std::size_t i = 0; i < rep.per_trial.size(); ++i) {
        const auto& r = rep.per_trial[i];
        out << i << ',' << r.pair_r << ',' << r.cd << ','
            << 2 * r.pair_r + 1 << ',' << 2 * r.cd + 1 << '\n';
      }
      break;
    case ExperimentKind::kMoment:
      out << "trial,x\n";
      for (std::size_t i = 0; i < rep.per_trial.size(); ++i)
        out << i << ',' << rep.per_trial[i].value << '\n';
      break;
  }
  return out.str();
}

void emit_report(const ExperimentReport& rep, const std::string& path,
                 ReportFormat format) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw std::runtime_error("emit_report: cannot open " + path +
                             " for writing");
  out << render_report(rep, format);
  if (!out) throw std::runtime_error("emit_report: write failed: " + path);
}

}  // namespace raag
