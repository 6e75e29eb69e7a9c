#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "raag/asymptotics.hpp"
#include "raag/experiment.hpp"
#include "raag/graph.hpp"

using namespace raag;
using doctest::Approx;

namespace {

ExperimentConfig base_config(ExperimentKind kind) {
  ExperimentConfig cfg;
  cfg.kind = kind;
  cfg.n = 20;
  cfg.p = 0.5;
  cfg.r = 2;
  cfg.trials = 10;
  cfg.seed = 0;
  return cfg;
}

std::string stripped_json(const ExperimentReport& rep) {
  auto j = nlohmann::ordered_json::parse(render_report(rep, ReportFormat::kJson));
  j.erase("wall_time_ms");
  return j.dump(2);
}

}  // namespace

TEST_CASE("degenerate p pins every experiment to its closed form") {
  auto betti = base_config(ExperimentKind::kBetti);
  betti.n = 10;
  betti.p = 1.0;
  betti.trials = 3;
  const auto b = run_betti_poisson_experiment(betti);
  for (const auto& t : b.per_trial) CHECK(t.value == 45);  // C(10,2)

  auto dim = base_config(ExperimentKind::kDimension);
  dim.n = 20;
  dim.p = 1.0;
  dim.trials = 2;
  const auto d = run_dimension_experiment(dim);
  for (const auto& t : d.per_trial) CHECK(t.cd == 20);

  auto dim0 = base_config(ExperimentKind::kDimension);
  dim0.n = 12;
  dim0.p = 0.0;
  dim0.trials = 2;
  const auto d0 = run_dimension_experiment(dim0);
  for (const auto& t : d0.per_trial) CHECK(t.cd == 1);

  auto moment = base_config(ExperimentKind::kMoment);
  moment.n = 4;
  moment.p = 1.0;
  moment.r = 2;
  moment.trials = 1;
  const auto m = run_moment_experiment(moment);
  CHECK(m.per_trial.at(0).value == 6);
}

TEST_CASE("config validation") {
  auto cfg = base_config(ExperimentKind::kBetti);
  cfg.trials = 0;
  CHECK_THROWS_AS(run_experiment(cfg), std::invalid_argument);

  cfg = base_config(ExperimentKind::kBetti);
  cfg.c = 2.0;  // both p and c
  CHECK_THROWS_AS(run_experiment(cfg), std::invalid_argument);

  cfg = base_config(ExperimentKind::kBetti);
  cfg.p.reset();
  CHECK_THROWS_AS(run_experiment(cfg), std::invalid_argument);

  cfg = base_config(ExperimentKind::kBetti);
  cfg.r = 1;
  CHECK_THROWS_AS(run_experiment(cfg), std::invalid_argument);
}

TEST_CASE("reports are deterministic and thread-count independent") {
  auto cfg = base_config(ExperimentKind::kBetti);
  cfg.n = 40;
  cfg.trials = 50;
  cfg.seed = 11;
  const auto a = run_betti_poisson_experiment(cfg, 1);
  const auto b = run_betti_poisson_experiment(cfg, 4);
  CHECK(stripped_json(a) == stripped_json(b));
  const auto c = run_betti_poisson_experiment(cfg, 1);
  CHECK(stripped_json(a) == stripped_json(c));

  auto tc = base_config(ExperimentKind::kTc);
  tc.n = 24;
  tc.trials = 8;
  const auto t1 = run_tc_experiment(tc, 1);
  const auto t2 = run_tc_experiment(tc, 3);
  CHECK(stripped_json(t1) == stripped_json(t2));
}

TEST_CASE("betti report carries the documented schema") {
  auto cfg = base_config(ExperimentKind::kBetti);
  cfg.n = 300;
  cfg.p.reset();
  cfg.c = 2.0;  // p = (2/300)^2 = 4/n^2
  cfg.trials = 200;
  const auto rep = run_betti_poisson_experiment(cfg);

  REQUIRE(rep.resolved_p.has_value());
  CHECK(*rep.resolved_p == Approx(4.0 / 90000.0).epsilon(1e-12));
  REQUIRE(rep.theory.lambda_n.has_value());
  CHECK(*rep.theory.lambda_n == Approx(1.9933333333333332).epsilon(1e-12));
  REQUIRE(rep.theory.lambda_limit.has_value());
  CHECK(*rep.theory.lambda_limit == Approx(2.0).epsilon(1e-12));

  const auto j = nlohmann::ordered_json::parse(
      render_report(rep, ReportFormat::kJson));
  for (const char* key :
       {"config", "rng_algorithm", "theory", "empirical", "statistics",
        "wall_time_ms"})
    CHECK(j.contains(key));
  for (const char* key :
       {"lambda_n", "lambda_limit", "z", "matula_window", "tc_window",
        "expected_x", "second_moment_ratio"})
    CHECK(j["theory"].contains(key));
  for (const char* key : {"pmf", "mean", "variance", "fractions"})
    CHECK(j["empirical"].contains(key));
  for (const char* key : {"tv_distance", "chi_square", "dof"})
    CHECK(j["statistics"].contains(key));
  CHECK(j["rng_algorithm"].get<std::string>().find("splitmix64") !=
        std::string::npos);

  double pmf_sum = 0.0;
  for (const auto& [k, v] : j["empirical"]["pmf"].items())
    pmf_sum += v.get<double>();
  CHECK(pmf_sum == Approx(1.0).epsilon(1e-12));
  CHECK(j["statistics"]["tv_distance"].get<double>() >= 0.0);
  CHECK(j["statistics"]["tv_distance"].get<double>() <= 1.0);
  CHECK(j["statistics"]["dof"].get<int>() >= 1);
}

TEST_CASE("betti sample mean tracks the expectation formula") {
  auto cfg = base_config(ExperimentKind::kBetti);
  cfg.n = 60;
  cfg.p = 0.3;
  cfg.r = 3;
  cfg.trials = 200;
  cfg.seed = 5;
  const auto rep = run_betti_poisson_experiment(cfg);
  const double want = expected_betti(60, 0.3, 3);
  const double se = std::sqrt(rep.empirical.variance / cfg.trials);
  CHECK(std::abs(rep.empirical.mean - want) <= 4.0 * se);
}

TEST_CASE("dimension report fractions") {
  auto cfg = base_config(ExperimentKind::kDimension);
  cfg.n = 40;
  cfg.p = 0.5;
  cfg.epsilon = 0.5;
  cfg.trials = 60;
  const auto rep = run_dimension_experiment(cfg);
  double in_window = -1, outside = -1, two_point = -1;
  for (const auto& [k, v] : rep.empirical.fractions) {
    if (k == "in_window") in_window = v;
    if (k == "outside_window") outside = v;
    if (k == "two_point_mass") two_point = v;
  }
  REQUIRE(in_window >= 0);
  CHECK(in_window + outside == Approx(1.0).epsilon(1e-12));
  CHECK(two_point >= 0.0);
  CHECK(two_point <= 1.0);
}

TEST_CASE("tc experiment on a fixed complete graph") {
  const std::string path = "tmp_k6.graph";
  save_graph_file(Graph::complete(6), path);
  ExperimentConfig cfg;
  cfg.kind = ExperimentKind::kTc;
  cfg.graph_path = path;
  cfg.trials = 2;
  const auto rep = run_tc_experiment(cfg);
  for (const auto& t : rep.per_trial) {
    CHECK(t.pair_r == 3);
    CHECK(t.cd == 6);
  }
  bool flag = false;
  for (const auto& [k, v] : rep.statistics.flags)
    if (k == "tc_lower_le_upper_all_trials") flag = v;
  CHECK(flag);
}

TEST_CASE("moment experiment agrees with the expectation formula") {
  auto cfg = base_config(ExperimentKind::kMoment);
  cfg.n = 16;
  cfg.p = 0.5;
  cfg.r = 2;
  cfg.trials = 300;
  cfg.seed = 21;
  const auto rep = run_moment_experiment(cfg);
  REQUIRE(rep.theory.expected_x.has_value());
  CHECK(*rep.theory.expected_x == Approx(2730.0).epsilon(1e-12));
  const double se = std::sqrt(rep.empirical.variance / cfg.trials);
  CHECK(std::abs(rep.empirical.mean - *rep.theory.expected_x) <= 4.0 * se);

  double p_positive = -1;
  for (const auto& [k, v] : rep.empirical.fractions)
    if (k == "x_positive") p_positive = v;
  CHECK(p_positive == 1.0);  // X > 0 is certain at this density
  bool bound_flag = false;
  for (const auto& [k, v] : rep.statistics.flags)
    if (k == "p_positive_ge_second_moment_bound") bound_flag = v;
  CHECK(bound_flag);
  REQUIRE(rep.theory.second_moment_ratio.has_value());
  CHECK(*rep.theory.second_moment_ratio >= 1.0);
}

TEST_CASE("moment experiment at n=30, r=3, p=0.6 over 3000 trials") {
  ExperimentConfig cfg;
  cfg.kind = ExperimentKind::kMoment;
  cfg.n = 30;
  cfg.p = 0.6;
  cfg.r = 3;
  cfg.trials = 3000;
  cfg.seed = 0;
  const auto rep = run_moment_experiment(cfg);
  const double se = std::sqrt(rep.empirical.variance / cfg.trials);
  CHECK(std::abs(rep.empirical.mean - *rep.theory.expected_x) <= 4.0 * se);

  // P(X > 0) >= (E X)^2 / E(X^2), with sampling slack on the right side.
  double p_positive = -1;
  for (const auto& [k, v] : rep.empirical.fractions)
    if (k == "x_positive") p_positive = v;
  CHECK(p_positive >= 0.0);
  bool bound_flag = false;
  for (const auto& [k, v] : rep.statistics.flags)
    if (k == "p_positive_ge_second_moment_bound") bound_flag = v;
  CHECK(bound_flag);
}

TEST_CASE("csv rendering has one data row per trial") {
  auto cfg = base_config(ExperimentKind::kTc);
  cfg.n = 12;
  cfg.trials = 7;
  const auto rep = run_tc_experiment(cfg);
  const std::string csv = render_report(rep, ReportFormat::kCsv);
  std::istringstream in(csv);
  std::string line;
  int data_rows = 0;
  bool in_data = false;
  while (std::getline(in, line)) {
    if (line.rfind("trial,", 0) == 0) {
      in_data = true;
      continue;
    }
    if (in_data && !line.empty()) ++data_rows;
  }
  CHECK(data_rows == 7);
  CHECK(csv.find("trial,pair_r,cd,tc_lower,tc_upper") != std::string::npos);
}

TEST_CASE("emit_report surfaces the path on failure") {
  const auto rep =
      run_betti_poisson_experiment(base_config(ExperimentKind::kBetti));
  CHECK_THROWS_WITH_AS(
      emit_report(rep, "no-such-dir/report.json", ReportFormat::kJson),
      doctest::Contains("no-such-dir/report.json"), std::runtime_error);
  emit_report(rep, "tmp_report.json", ReportFormat::kJson);
  std::ifstream check("tmp_report.json");
  CHECK(check.good());
}

TEST_CASE("p = 0 betti experiment degenerates cleanly") {
  auto cfg = base_config(ExperimentKind::kBetti);
  cfg.n = 15;
  cfg.p = 0.0;
  cfg.r = 2;
  cfg.trials = 5;
  const auto rep = run_betti_poisson_experiment(cfg);
  for (const auto& t : rep.per_trial) CHECK(t.value == 0);
  REQUIRE(rep.theory.lambda_n.has_value());
  CHECK(*rep.theory.lambda_n == 0.0);
  REQUIRE(rep.statistics.tv_distance.has_value());
  CHECK(*rep.statistics.tv_distance == Approx(0.0).epsilon(1e-12));
}

TEST_CASE("goodness-of-fit helpers") {
  std::vector<std::uint64_t> degenerate(100, 3);
  const double tv = tv_distance_vs_poisson(degenerate, 0.001);
  CHECK(tv > 0.99);
  CHECK(tv <= 1.0);

  const auto cs = chi_square_vs_poisson(degenerate, 3.0);
  CHECK(cs.statistic >= 0.0);
  CHECK(cs.dof >= 1);

  CHECK_THROWS_AS(tv_distance_vs_poisson({}, 1.0), std::invalid_argument);
}
