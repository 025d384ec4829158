#include "cli/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "fidest/harness/config.hpp"
#include "fidest/harness/csv.hpp"
#include "fidest/harness/experiment.hpp"
#include "fidest/harness/svg.hpp"
#include "fidest/quantum/bloch.hpp"
#include "fidest/quantum/errors.hpp"
#include "fidest/quantum/haar.hpp"
#include "fidest/quantum/permanent.hpp"
#include "fidest/simulator/protocol.hpp"

namespace fidest::cli {
namespace {

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

struct TraceFlags {
  std::size_t dim = 2;
  std::string strategy = "adaptive";
  std::optional<std::string> catalog;
  std::size_t k_max = 10;
  std::uint64_t seed = 1;
  bool verbose = false;
};

struct ExperimentFlags {
  std::optional<std::string> config;
  std::optional<std::size_t> dim;
  std::vector<std::string> strategies;
  std::optional<std::string> catalog;
  std::optional<std::size_t> n_experiments;
  std::optional<std::size_t> k_max;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out_csv;
  std::optional<std::string> out_svg;
  std::size_t threads = 0;
  bool linear = false;
  bool verbose = false;
};

std::string basis_text(const Strategy& strategy, const MeasurementBasis& basis) {
  if (strategy.uses_catalog()) return basis.label();
  if (basis.dim() == 2) {
    const auto a = state_to_bloch(basis[0]);
    return "theta=" + fmt("%.6f", a.theta) + ",phi=" + fmt("%.6f", a.phi);
  }
  return "haar";
}

std::string_view stop_text(StopReason r) {
  switch (r) {
    case StopReason::IterationCap: return "iteration-cap";
    case StopReason::FidelityDelta: return "fidelity-delta";
    case StopReason::PurityThreshold: return "purity-threshold";
    case StopReason::Truncated: return "truncated";
  }
  return "unknown";
}

int cmd_trace(const TraceFlags& f, std::ostream& out, std::ostream& err) {
  Strategy strategy;
  try {
    strategy = harness::make_strategy(f.strategy, f.catalog, f.dim);
    strategy.validate(f.dim);
    if (f.dim > 2 && f.k_max + 1 > kPermanentSizeCap)
      throw ValidationError("--k-max " + std::to_string(f.k_max) + " exceeds the exact-path cap of " +
                            std::to_string(kPermanentSizeCap - 1) + " for d = " + std::to_string(f.dim));
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  const RandomSource root(f.seed);
  RandomSource hidden_rng = root.split(0);
  const PureState hidden = haar_random_state(f.dim, hidden_rng);
  const auto run = run_protocol(hidden, strategy, StoppingRule::iteration_cap(f.k_max), root.split(1));

  if (f.verbose && f.dim == 2) {
    const auto a = state_to_bloch(hidden);
    err << "hidden state theta=" << fmt("%.6f", a.theta) << " phi=" << fmt("%.6f", a.phi) << "\n";
  }
  for (std::size_t k = 1; k <= run.estimates.size(); ++k) {
    const auto& e = run.estimates[k - 1];
    out << "k=" << k << " basis=" << basis_text(strategy, run.bases_used[k - 1]) << " outcome=" << run.outcomes[k - 1]
        << " lambda_max=" << fmt("%.12f", e.fidelity) << " infidelity=" << fmt("%.12f", e.infidelity)
        << " purity=" << fmt("%.12f", e.purity) << "\n";
    if (f.verbose && run.degenerate_choice[k - 1]) err << "k=" << k << ": degenerate optimum, first restart kept\n";
  }
  const Estimate& last = run.estimates.empty() ? run.initial : run.estimates.back();
  out << "summary strategy=" << strategy.label() << " dim=" << f.dim << " k=" << run.estimates.size()
      << " lambda_max=" << fmt("%.12f", last.fidelity) << " infidelity=" << fmt("%.12f", last.infidelity)
      << " stop=" << stop_text(run.stop_reason) << "\n";
  return kExitOk;
}

harness::ExperimentConfig experiment_config(const ExperimentFlags& f) {
  harness::ExperimentConfig cfg;
  if (f.config) {
    if (f.dim || !f.strategies.empty() || f.catalog)
      throw CLI::ValidationError("--dim, --strategy and --catalog cannot be combined with --config");
    cfg = harness::load_config(*f.config);
  } else {
    cfg.dim = f.dim.value_or(2);
    std::vector<std::string> kinds = f.strategies;
    if (kinds.empty()) {
      kinds = cfg.dim == 2 ? std::vector<std::string>{"adaptive", "restricted-adaptive", "nonadaptive", "random"}
                           : std::vector<std::string>{"restricted-adaptive", "nonadaptive"};
    }
    for (const auto& k : kinds) cfg.strategies.push_back(harness::make_strategy(k, f.catalog, cfg.dim));
    cfg.n_experiments = 100;
    cfg.k_max = cfg.dim == 2 ? 30 : 12;
    cfg.seed = 1;
  }
  if (f.n_experiments) cfg.n_experiments = *f.n_experiments;
  if (f.k_max) cfg.k_max = *f.k_max;
  if (f.seed) cfg.seed = *f.seed;
  if (f.out_csv) cfg.output.csv = *f.out_csv;
  if (f.out_svg) cfg.output.svg = *f.out_svg;
  cfg.threads = f.threads;
  harness::validate(cfg);
  return cfg;
}

void print_summary(const harness::RunStatistics& stats, std::ostream& out) {
  out << "k";
  for (const auto& s : stats.series) out << " " << s.label << " " << s.label << "_stderr";
  if (stats.bound) out << " bound";
  out << "\n";
  for (std::size_t k = 0; k <= stats.k_max(); ++k) {
    out << k;
    for (const auto& s : stats.series) out << " " << fmt("%.6f", s.mean[k]) << " " << fmt("%.6f", s.stderr_mean[k]);
    if (stats.bound) out << " " << fmt("%.6f", (*stats.bound)[k]);
    out << "\n";
  }
}

int cmd_experiment(const ExperimentFlags& f, std::ostream& out, std::ostream& err) {
  harness::ExperimentConfig cfg;
  try {
    cfg = experiment_config(f);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  harness::ProgressCallback progress;
  if (f.verbose) {
    progress = [&err](std::size_t done, std::size_t total) {
      if (done == total || done % 50 == 0) err << "experiments " << done << "/" << total << "\n";
    };
  }
  try {
    const auto stats = harness::run_experiment(cfg, progress);
    print_summary(stats, out);
    if (!cfg.output.csv.empty()) harness::write_csv(stats, cfg.output.csv);
    if (cfg.output.svg) {
      harness::SvgOptions svg;
      svg.log_scale = !f.linear;
      harness::write_svg_plot(stats, *cfg.output.svg, svg);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitOk;
}

int cmd_validate_table1(double perturb, std::ostream& out) {
  bool ok = true;
  for (const auto& row : validate_table1(perturb)) {
    ok = ok && row.pass;
    out << (row.pass ? "PASS" : "FAIL") << " k=" << row.k << " lambda_max=" << fmt("%.12f", row.lambda_max)
        << " expected=" << fmt("%.12f", row.expected) << " " << row.detail << "\n";
  }
  return ok ? kExitOk : kExitFailure;
}

int cmd_bound(std::size_t k_max, std::ostream& out) {
  for (std::size_t k = 0; k <= k_max; ++k) out << "k=" << k << " bound=" << fmt("%.12g", harness::massar_bound(k)) << "\n";
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fidelity-optimized adaptive Bayesian pure-state estimation", "fidest"};
  app.require_subcommand(1);
  const std::vector<std::string> strategy_names{"adaptive", "restricted-adaptive", "nonadaptive", "random"};
  const std::vector<std::string> catalog_names{"pauli", "local-pauli-2q"};

  TraceFlags tf;
  auto* trace = app.add_subcommand("trace", "Run one protocol trace and print each iteration");
  trace->add_option("--dim", tf.dim, "Hilbert space dimension")->check(CLI::Range(2, 16));
  trace->add_option("--strategy", tf.strategy, "Basis strategy")->check(CLI::IsMember(strategy_names));
  trace->add_option("--catalog", tf.catalog, "Basis catalog for catalog strategies")->check(CLI::IsMember(catalog_names));
  trace->add_option("--k-max", tf.k_max, "Number of measurements");
  trace->add_option("--seed", tf.seed, "Random seed");
  trace->add_flag("--verbose", tf.verbose, "Diagnostics on stderr");

  ExperimentFlags ef;
  auto* experiment = app.add_subcommand("experiment", "Run a Monte Carlo experiment and write CSV/SVG");
  experiment->add_option("--config", ef.config, "JSON experiment config");
  experiment->add_option("--dim", ef.dim, "Hilbert space dimension (without --config)")->check(CLI::Range(2, 16));
  experiment->add_option("--strategy", ef.strategies, "Strategy, repeatable (without --config)")
      ->check(CLI::IsMember(strategy_names));
  experiment->add_option("--catalog", ef.catalog, "Basis catalog (without --config)")->check(CLI::IsMember(catalog_names));
  experiment->add_option("--n-experiments", ef.n_experiments, "Number of experiments");
  experiment->add_option("--k-max", ef.k_max, "Measurements per experiment");
  experiment->add_option("--seed", ef.seed, "Random seed");
  experiment->add_option("--out-csv", ef.out_csv, "CSV output path");
  experiment->add_option("--out-svg", ef.out_svg, "SVG output path");
  experiment->add_option("--threads", ef.threads, "Worker threads (0 = all cores)");
  experiment->add_flag("--linear", ef.linear, "Linear infidelity axis in the SVG");
  experiment->add_flag("--verbose", ef.verbose, "Progress on stderr");

  double perturb = 0.0;
  auto* table1 = app.add_subcommand("validate-table1", "Check the scripted first-measurements table");
  table1->add_option("--perturb", perturb)->group("");

  std::size_t bound_k_max = 30;
  auto* bound = app.add_subcommand("bound", "Print the collective-measurement infidelity bound 1/(k+2)");
  bound->add_option("--k-max", bound_k_max, "Largest k");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*trace) return cmd_trace(tf, out, err);
    if (*experiment) return cmd_experiment(ef, out, err);
    if (*table1) return cmd_validate_table1(perturb, out);
    if (*bound) return cmd_bound(bound_k_max, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace fidest::cli
