#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "fidest/closedform/bloch_moments.hpp"
#include "fidest/optimizer/basis_score.hpp"
#include "fidest/optimizer/catalog.hpp"
#include "fidest/optimizer/qubit_optimizer.hpp"
#include "fidest/posterior/record.hpp"
#include "fidest/quantum/random.hpp"

namespace fidest {

// Basis-selection strategy for the closed-loop protocol.
//   AdaptiveContinuous:         unrestricted fidelity-optimal basis (qubit only).
//   RestrictedAdaptive:         fidelity-optimal basis within a catalog.
//   RestrictedNonadaptiveCycle: catalog entries visited in order, period = size.
//   RandomHaarBasis:            a fresh Haar-random basis each iteration.
struct Strategy {
  enum class Kind { AdaptiveContinuous, RestrictedAdaptive, RestrictedNonadaptiveCycle, RandomHaarBasis };

  Kind kind = Kind::AdaptiveContinuous;
  std::optional<BasisCatalog> catalog;

  static Strategy adaptive() { return {Kind::AdaptiveContinuous, std::nullopt}; }
  static Strategy restricted_adaptive(BasisCatalog c) { return {Kind::RestrictedAdaptive, std::move(c)}; }
  static Strategy nonadaptive_cycle(BasisCatalog c) { return {Kind::RestrictedNonadaptiveCycle, std::move(c)}; }
  static Strategy random_haar() { return {Kind::RandomHaarBasis, std::nullopt}; }

  bool uses_catalog() const noexcept {
    return kind == Kind::RestrictedAdaptive || kind == Kind::RestrictedNonadaptiveCycle;
  }

  // "adaptive", "restricted-adaptive", "nonadaptive" or "random".
  std::string label() const;

  // Throws ValidationError when the strategy cannot run in dimension dim.
  void validate(std::size_t dim) const;
};

std::string_view to_string(Strategy::Kind kind);

// Parses the labels produced by Strategy::label().
std::optional<Strategy::Kind> parse_strategy_kind(std::string_view name);

// Stateful basis chooser. It sees only the measurement record (never the
// emitted state), its own random stream and its own history.
class BasisPlanner {
 public:
  BasisPlanner(Strategy strategy, std::size_t dim, RandomSource rng, OptimizerSettings optimizer,
               MomentPolicy moments);

  // Step-1 basis: Haar-random for continuous/random strategies, the first
  // catalog entry for catalog strategies (or a random entry when
  // random_catalog_start is set).
  MeasurementBasis first_basis(bool random_catalog_start = false);

  // Next basis given the record. bloch may carry precomputed qubit moments
  // of the same record.
  MeasurementBasis next_basis(const MeasurementRecord& record, const BlochMoments* bloch = nullptr);

  const Strategy& strategy() const noexcept { return strategy_; }
  const std::optional<OptimizationReport>& last_report() const noexcept { return last_report_; }

 private:
  Strategy strategy_;
  std::size_t dim_;
  RandomSource rng_;
  OptimizerSettings optimizer_;
  MomentPolicy moments_;
  std::size_t cycle_index_ = 0;
  std::optional<MeasurementBasis> previous_;
  std::optional<OptimizationReport> last_report_;
};

}  // namespace fidest
