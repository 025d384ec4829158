#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fidest/optimizer/moment_policy.hpp"
#include "fidest/optimizer/qubit_optimizer.hpp"
#include "fidest/simulator/strategy.hpp"

namespace fidest::harness {

struct OutputPaths {
  std::string csv;
  std::optional<std::string> svg;
};

struct ExperimentConfig {
  std::size_t dim = 2;
  std::vector<Strategy> strategies;
  std::size_t n_experiments = 0;
  std::size_t k_max = 0;
  std::uint64_t seed = 0;
  OptimizerSettings optimizer{};
  MomentPolicy moments{};
  OutputPaths output{};
  // Catalog strategies start from a random catalog entry.
  bool random_catalog_start = false;
  // Worker threads; 0 picks std::thread::hardware_concurrency().
  std::size_t threads = 0;
};

// Throws ValidationError on: no strategies, duplicate strategy labels,
// n_experiments == 0, k_max == 0, a strategy that cannot run in dim, or a
// k_max the exact permanent path cannot reach (d > 2; qubit runs fall back to
// quadrature).
void validate(const ExperimentConfig& config);

struct StrategySeries {
  std::string label;
  std::vector<double> mean;         // indexed by k = 0..k_max
  std::vector<double> stderr_mean;  // sample std / sqrt(n)
  std::vector<std::size_t> n;
  // samples[k][e]: I_k for experiment e. Empty when read back from CSV.
  std::vector<std::vector<double>> samples;
};

struct RunStatistics {
  std::size_t dim = 0;
  std::vector<StrategySeries> series;
  // 1/(k+2) for k = 0..k_max; only for d = 2.
  std::optional<std::vector<double>> bound;

  std::size_t k_max() const { return series.empty() ? 0 : series.front().mean.size() - 1; }
  const StrategySeries& at(const std::string& label) const;
};

// 1 - (k+1)/(k+2) = 1/(k+2).
double massar_bound(std::size_t k);

// Fills mean, stderr_mean and n from samples.
void summarize(StrategySeries& series);

using ProgressCallback = std::function<void(std::size_t done, std::size_t total)>;

// Runs every strategy on the same Haar-random hidden state per experiment.
// Experiment e uses RandomSource(seed).split(e); strategy s within it uses
// sub-stream s + 1, the hidden state sub-stream 0. Results are merged by
// experiment index, so output does not depend on the thread count. Any
// failed run aborts the whole experiment.
RunStatistics run_experiment(const ExperimentConfig& config, const ProgressCallback& progress = {});

}  // namespace fidest::harness
