// Command-line front end: sample random graphs, compute group invariants,
// evaluate the closed-form asymptotics and run Monte Carlo experiments.
//
// Exit codes: 0 success, 2 invalid arguments or domain error, 3 I/O error.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "raag/asymptotics.hpp"
#include "raag/cliques.hpp"
#include "raag/experiment.hpp"
#include "raag/graph.hpp"
#include "raag/invariants.hpp"
#include "raag/rng.hpp"

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + out_path);
  out << text;
  if (!out) throw std::runtime_error("write failed: " + out_path);
}

struct CommonFlags {
  int n = 0;
  std::optional<double> p;
  std::optional<double> c;
  int r = 2;
  double epsilon = 0.25;
  int trials = 1;
  std::uint64_t seed = 0;
  std::string out;
  std::string format = "json";
  std::string terms_csv;
  std::string graph_path;
};

double resolve_p(const CommonFlags& f) {
  if (f.p.has_value() == f.c.has_value())
    throw std::invalid_argument("exactly one of --p and --c must be given");
  if (f.p) return *f.p;
  return raag::critical_p(f.n, f.r, *f.c);
}

int cmd_sample(const CommonFlags& f) {
  const double p = resolve_p(f);
  raag::Graph g = raag::sample_gnp(raag::GnpParams(f.n, p, f.seed));
  write_output(raag::serialize_graph(g), f.out);
  return kExitOk;
}

int cmd_invariants(const CommonFlags& f) {
  if (f.graph_path.empty())
    throw std::invalid_argument("invariants: --graph <path> is required");
  raag::Graph g = raag::load_graph_file(f.graph_path);
  const raag::RaagInvariants inv = raag::compute_invariants(g);
  write_output(raag::invariants_to_json(inv) + "\n", f.out);
  return kExitOk;
}

template <typename Fn>
ordered_json try_value(Fn fn) {
  try {
    return fn();
  } catch (const std::exception&) {
    return nullptr;
  }
}

int cmd_asymptotics(const CommonFlags& f) {
  if (!f.p && !f.c)
    throw std::invalid_argument("asymptotics: --p or --c is required");
  const double p = resolve_p(f);
  const int n = f.n;
  const int r = f.r;
  ordered_json j;
  j["n"] = n;
  j["p"] = p;
  j["r"] = r;
  j["epsilon"] = f.epsilon;
  j["q"] = 1.0 / p;
  j["expected_betti"] = try_value([&] { return raag::expected_betti(n, p, r); });
  j["lambda_n"] = j["expected_betti"];
  j["lambda_limit"] = try_value([&] {
    const double c_eff = f.c ? *f.c : n * std::pow(p, (r - 1) / 2.0);
    return std::exp(r * std::log(c_eff) - std::lgamma(r + 1.0));
  });
  j["z"] = try_value([&] { return raag::z_statistic(n, p); });
  j["matula_window"] = try_value([&]() -> ordered_json {
    const auto [lo, hi] = raag::matula_window(n, p, f.epsilon);
    return ordered_json::array({lo, hi});
  });
  j["tc_window"] = try_value([&]() -> ordered_json {
    const auto [lo, hi] = raag::theoretical_tc_window(n, p, f.epsilon);
    return ordered_json::array({lo, hi});
  });
  j["lemma4_statistic"] =
      try_value([&] { return raag::lemma4_statistic(n, p, f.epsilon); });
  j["expected_biclique_count"] =
      try_value([&] { return raag::expected_biclique_count(n, p, r); });
  write_output(j.dump(2) + "\n", f.out);
  return kExitOk;
}

int cmd_second_moment(const CommonFlags& f) {
  if (!f.p) throw std::invalid_argument("second-moment: --p is required");
  const double p = *f.p;
  const auto summary = raag::second_moment_ratio(f.n, p, f.r);
  const auto f0 = raag::f0_bound_check(f.n, f.r);
  const double split_lambda = raag::default_split_lambda(p);
  const auto violations =
      raag::term_monotonicity_diagnostic(f.n, p, f.r, split_lambda);

  ordered_json j;
  j["n"] = f.n;
  j["p"] = p;
  j["r"] = f.r;
  j["q"] = 1.0 / p;
  j["ratio"] = summary.ratio;
  j["f_sum"] = summary.f_sum;
  j["term_count"] = summary.term_count;
  j["f0"] = f0.f0;
  j["f0_lower_bound"] = f0.bound;
  j["f0_bound_holds"] = f0.holds;
  j["split_lambda"] = split_lambda;
  j["monotonicity_violations"] = violations.size();

  if (!f.terms_csv.empty()) {
    const auto terms = raag::second_moment_terms(f.n, p, f.r);
    std::ofstream out(f.terms_csv, std::ios::binary);
    if (!out)
      throw std::runtime_error("cannot open output file: " + f.terms_csv);
    out << "a,b,c,d,ell,L,logF,logT\n";
    char buf[128];
    for (const auto& t : terms) {
      std::snprintf(buf, sizeof(buf), "%d,%d,%d,%d,%d,%lld,%.17e,%.17e\n",
                    t.alpha[0], t.alpha[1], t.alpha[2], t.alpha[3], t.ell,
                    static_cast<long long>(t.overlap_edges), t.log_f, t.log_t);
      out << buf;
    }
    if (!out) throw std::runtime_error("write failed: " + f.terms_csv);
  }
  write_output(j.dump(2) + "\n", f.out);
  return kExitOk;
}

int cmd_experiment(const std::string& kind_name, const CommonFlags& f) {
  raag::ExperimentConfig cfg;
  if (kind_name == "betti")
    cfg.kind = raag::ExperimentKind::kBetti;
  else if (kind_name == "dimension")
    cfg.kind = raag::ExperimentKind::kDimension;
  else if (kind_name == "tc")
    cfg.kind = raag::ExperimentKind::kTc;
  else if (kind_name == "moment")
    cfg.kind = raag::ExperimentKind::kMoment;
  else
    throw std::invalid_argument("unknown experiment kind: " + kind_name);
  cfg.n = f.n;
  cfg.p = f.p;
  cfg.c = f.c;
  cfg.r = f.r;
  cfg.epsilon = f.epsilon;
  cfg.trials = f.trials;
  cfg.seed = f.seed;
  cfg.graph_path = f.graph_path;

  raag::ReportFormat format;
  if (f.format == "json")
    format = raag::ReportFormat::kJson;
  else if (f.format == "csv")
    format = raag::ReportFormat::kCsv;
  else
    throw std::invalid_argument("--format must be json or csv");

  const raag::ExperimentReport report = raag::run_experiment(cfg);
  write_output(raag::render_report(report, format), f.out);
  return kExitOk;
}

void add_common_flags(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--n", f.n, "number of vertices");
  cmd->add_option("--p", f.p, "edge probability in [0, 1]");
  cmd->add_option("--r", f.r, "dimension / clique size");
  cmd->add_option("--c", f.c, "scaling constant, sets p = (c/n)^(2/(r-1))");
  cmd->add_option("--epsilon", f.epsilon, "window half-width")
      ->default_val(0.25);
  cmd->add_option("--trials", f.trials, "number of Monte Carlo trials");
  cmd->add_option("--seed", f.seed, "master RNG seed")->default_val(0);
  cmd->add_option("--out", f.out, "output path (default: stdout)");
  cmd->add_option("--format", f.format, "report format: json or csv")
      ->default_val("json");
  cmd->add_option("--graph", f.graph_path, "fixed input graph file");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"topological invariants of right-angled Artin groups over "
               "Erdos-Renyi random graphs"};
  app.require_subcommand(1);

  CommonFlags f;
  CLI::App* sample = app.add_subcommand("sample", "emit a G(n,p) graph file");
  add_common_flags(sample, f);
  CLI::App* invariants =
      app.add_subcommand("invariants", "graph file -> JSON invariants");
  add_common_flags(invariants, f);
  CLI::App* asymptotics =
      app.add_subcommand("asymptotics", "print formula values for n,p,r,eps");
  add_common_flags(asymptotics, f);
  CLI::App* second_moment = app.add_subcommand(
      "second-moment", "print E(X^2)/E(X)^2 and the term table");
  add_common_flags(second_moment, f);
  second_moment->add_option("--terms-csv", f.terms_csv,
                            "write the per-term table to this CSV file");
  CLI::App* experiment = app.add_subcommand(
      "experiment", "run a Monte Carlo experiment and emit a report");
  std::string kind;
  experiment->add_option("kind", kind, "betti | dimension | tc | moment")
      ->required();
  add_common_flags(experiment, f);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (sample->parsed()) return cmd_sample(f);
    if (invariants->parsed()) return cmd_invariants(f);
    if (asymptotics->parsed()) return cmd_asymptotics(f);
    if (second_moment->parsed()) return cmd_second_moment(f);
    if (experiment->parsed()) return cmd_experiment(kind, f);
    std::cerr << "no subcommand given\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  }
}
