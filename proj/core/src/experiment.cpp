#include "fidest/harness/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <set>
#include <thread>

#include "fidest/quantum/errors.hpp"
#include "fidest/quantum/haar.hpp"
#include "fidest/quantum/permanent.hpp"
#include "fidest/simulator/protocol.hpp"

namespace fidest::harness {

void validate(const ExperimentConfig& config) {
  if (config.dim < 2) throw ValidationError("experiment: dim must be at least 2");
  if (config.strategies.empty()) throw ValidationError("experiment: at least one strategy is required");
  if (config.n_experiments == 0) throw ValidationError("experiment: n_experiments must be positive");
  if (config.k_max == 0) throw ValidationError("experiment: k_max must be positive");
  std::set<std::string> labels;
  for (const auto& s : config.strategies) {
    s.validate(config.dim);
    if (!labels.insert(s.label()).second)
      throw ValidationError("experiment: duplicate strategy '" + s.label() + "'");
  }
  config.moments.prior.validate(config.dim);
  if (config.dim > 2 && config.k_max + 1 > kPermanentSizeCap)
    throw ValidationError("experiment: k_max = " + std::to_string(config.k_max) + " exceeds the exact-path cap of " +
                          std::to_string(kPermanentSizeCap - 1) + " for d = " + std::to_string(config.dim));
}

const StrategySeries& RunStatistics::at(const std::string& label) const {
  for (const auto& s : series)
    if (s.label == label) return s;
  throw ValidationError("no strategy '" + label + "' in statistics");
}

double massar_bound(std::size_t k) { return 1.0 / (static_cast<double>(k) + 2.0); }

void summarize(StrategySeries& series) {
  const std::size_t nk = series.samples.size();
  series.mean.assign(nk, 0.0);
  series.stderr_mean.assign(nk, 0.0);
  series.n.assign(nk, 0);
  for (std::size_t k = 0; k < nk; ++k) {
    const auto& xs = series.samples[k];
    const std::size_t n = xs.size();
    series.n[k] = n;
    if (n == 0) continue;
    double sum = 0.0;
    for (double x : xs) sum += x;
    const double mean = sum / static_cast<double>(n);
    double ss = 0.0;
    for (double x : xs) ss += (x - mean) * (x - mean);
    series.mean[k] = mean;
    series.stderr_mean[k] = n > 1 ? std::sqrt(ss / static_cast<double>(n - 1)) / std::sqrt(static_cast<double>(n)) : 0.0;
  }
}

namespace {

// Infidelity trajectory k = 0..k_max for one strategy on one hidden state.
std::vector<double> trajectory(const ExperimentConfig& config, const Strategy& strategy, const PureState& hidden,
                               const RandomSource& rng) {
  ProtocolOptions opts;
  opts.optimizer = config.optimizer;
  opts.moments = config.moments;
  opts.random_catalog_start = config.random_catalog_start;
  const auto run = run_protocol(hidden, strategy, StoppingRule::iteration_cap(config.k_max), rng, opts);
  if (run.truncated || run.estimates.size() != config.k_max)
    throw std::runtime_error("strategy " + strategy.label() + " stopped after " +
                             std::to_string(run.estimates.size()) + " of " + std::to_string(config.k_max) +
                             " measurements");
  std::vector<double> out;
  out.reserve(config.k_max + 1);
  out.push_back(run.initial.infidelity);
  for (const auto& e : run.estimates) out.push_back(e.infidelity);
  return out;
}

}  // namespace

RunStatistics run_experiment(const ExperimentConfig& config, const ProgressCallback& progress) {
  validate(config);
  const std::size_t ns = config.strategies.size();
  const std::size_t ne = config.n_experiments;
  const std::size_t nk = config.k_max + 1;

  // results[e][s] holds the trajectory of strategy s in experiment e.
  std::vector<std::vector<std::vector<double>>> results(ne);
  const RandomSource root(config.seed);

  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> done{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex mu;

  auto worker = [&] {
    for (;;) {
      if (failed.load()) return;
      const std::size_t e = next.fetch_add(1);
      if (e >= ne) return;
      try {
        const RandomSource exp_rng = root.split(e);
        RandomSource hidden_rng = exp_rng.split(0);
        const PureState hidden = haar_random_state(config.dim, hidden_rng);
        std::vector<std::vector<double>> row;
        row.reserve(ns);
        for (std::size_t s = 0; s < ns; ++s)
          row.push_back(trajectory(config, config.strategies[s], hidden, exp_rng.split(s + 1)));
        results[e] = std::move(row);
      } catch (...) {
        std::lock_guard lock(mu);
        if (!failed.exchange(true)) error = std::current_exception();
        return;
      }
      const std::size_t d = ++done;
      if (progress) {
        std::lock_guard lock(mu);
        progress(d, ne);
      }
    }
  };

  std::size_t threads = config.threads ? config.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, ne);
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (error) std::rethrow_exception(error);

  RunStatistics stats;
  stats.dim = config.dim;
  for (std::size_t s = 0; s < ns; ++s) {
    StrategySeries series;
    series.label = config.strategies[s].label();
    series.samples.assign(nk, std::vector<double>(ne));
    for (std::size_t e = 0; e < ne; ++e)
      for (std::size_t k = 0; k < nk; ++k) series.samples[k][e] = results[e][s][k];
    summarize(series);
    stats.series.push_back(std::move(series));
  }
  if (config.dim == 2) {
    std::vector<double> bound(nk);
    for (std::size_t k = 0; k < nk; ++k) bound[k] = massar_bound(k);
    stats.bound = std::move(bound);
  }
  return stats;
}

}  // namespace fidest::harness
