#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "fidest/optimizer/moment_policy.hpp"
#include "fidest/optimizer/qubit_optimizer.hpp"
#include "fidest/posterior/record.hpp"
#include "fidest/quantum/random.hpp"
#include "fidest/quantum/state.hpp"
#include "fidest/simulator/strategy.hpp"

namespace fidest {

// Draws outcome n with probability |<e_n|hidden>|^2 by inverse CDF; the last
// index absorbs any rounding remainder.
std::size_t sample_outcome(const PureState& hidden, const MeasurementBasis& basis, RandomSource& rng);

struct StoppingRule {
  // IterationCap:    run exactly max_iterations measurements.
  // FidelityDelta:   stop once |<Psi_{k-1}|Psi_k>|^2 > 1 - epsilon (k >= 2).
  // PurityThreshold: stop once Tr[rho_k^2] > 1 - epsilon.
  // The latter two also stop at max_iterations.
  enum class Kind { IterationCap, FidelityDelta, PurityThreshold };

  Kind kind = Kind::IterationCap;
  std::size_t max_iterations = 0;
  double epsilon = 0.0;

  static StoppingRule iteration_cap(std::size_t k_max) { return {Kind::IterationCap, k_max, 0.0}; }
  static StoppingRule fidelity_delta(double eps, std::size_t k_max) { return {Kind::FidelityDelta, k_max, eps}; }
  static StoppingRule purity_threshold(double eps, std::size_t k_max) { return {Kind::PurityThreshold, k_max, eps}; }
};

struct Estimate {
  PureState state;    // most likely state |Psi_k>
  double fidelity;    // lambda_max of rho_k
  double infidelity;  // 1 - |<Psi|Psi_k>|^2 against the emitted state
  double purity;      // Tr[rho_k^2]
};

enum class StopReason { IterationCap, FidelityDelta, PurityThreshold, Truncated };

struct ProtocolRun {
  PureState hidden_state;
  MeasurementRecord record;
  Estimate initial;                          // k = 0, before any measurement
  std::vector<Estimate> estimates;           // estimates[k-1] after k measurements
  std::vector<MeasurementBasis> bases_used;  // bases_used[k-1] measured at step k
  std::vector<std::size_t> outcomes;         // outcome index at step k
  std::vector<bool> degenerate_choice;       // optimizer flagged a degenerate optimum for step k
  StoppingRule stopping;
  StopReason stop_reason = StopReason::IterationCap;
  bool truncated = false;                    // exact path hit its cap before the iteration cap
};

// Forces the outcome index at step k (1-based) in the given basis.
using OutcomeScript = std::function<std::size_t(std::size_t k, const MeasurementBasis& basis)>;

// Replaces the planned basis for step k (1-based) before it is measured.
using BasisHook = std::function<MeasurementBasis(std::size_t k, const MeasurementBasis& planned)>;

struct ProtocolOptions {
  OptimizerSettings optimizer{};
  MomentPolicy moments{};
  // Replaces the strategy's step-1 basis.
  std::optional<MeasurementBasis> first_basis;
  // Catalog strategies start from a random catalog entry instead of entry 0.
  bool random_catalog_start = false;
  // Test hook: scripted outcomes instead of Born-rule sampling.
  OutcomeScript outcome_script;
  // Test hook: perturbs or replaces the basis measured at each step.
  BasisHook basis_hook;
};

// Runs the closed loop: measure, append, re-estimate, choose the next basis.
// rng.split(0) drives measurement sampling and rng.split(1) the strategy, so
// basis choices never depend on how outcomes were drawn.
ProtocolRun run_protocol(const PureState& hidden, const Strategy& strategy, const StoppingRule& stopping,
                         const RandomSource& rng, const ProtocolOptions& options = {});

}  // namespace fidest
