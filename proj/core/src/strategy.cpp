#include "fidest/simulator/strategy.hpp"

#include "fidest/quantum/bloch.hpp"
#include "fidest/quantum/errors.hpp"
#include "fidest/quantum/haar.hpp"

namespace fidest {

std::string_view to_string(Strategy::Kind kind) {
  switch (kind) {
    case Strategy::Kind::AdaptiveContinuous: return "adaptive";
    case Strategy::Kind::RestrictedAdaptive: return "restricted-adaptive";
    case Strategy::Kind::RestrictedNonadaptiveCycle: return "nonadaptive";
    case Strategy::Kind::RandomHaarBasis: return "random";
  }
  return "unknown";
}

std::optional<Strategy::Kind> parse_strategy_kind(std::string_view name) {
  for (auto k : {Strategy::Kind::AdaptiveContinuous, Strategy::Kind::RestrictedAdaptive,
                 Strategy::Kind::RestrictedNonadaptiveCycle, Strategy::Kind::RandomHaarBasis})
    if (to_string(k) == name) return k;
  return std::nullopt;
}

std::string Strategy::label() const { return std::string(to_string(kind)); }

void Strategy::validate(std::size_t dim) const {
  if (uses_catalog()) {
    if (!catalog) throw ValidationError(label() + " strategy requires a basis catalog");
    if (catalog->dim() != dim)
      throw ValidationError(label() + " strategy: catalog dimension " + std::to_string(catalog->dim()) +
                            " does not match d = " + std::to_string(dim));
  }
  if (kind == Kind::AdaptiveContinuous && dim != 2)
    throw ValidationError("adaptive (continuous) strategy is only available for d = 2; d = " +
                          std::to_string(dim) + " requires a catalog strategy");
}

BasisPlanner::BasisPlanner(Strategy strategy, std::size_t dim, RandomSource rng, OptimizerSettings optimizer,
                           MomentPolicy moments)
    : strategy_(std::move(strategy)),
      dim_(dim),
      rng_(std::move(rng)),
      optimizer_(optimizer),
      moments_(moments) {
  strategy_.validate(dim_);
}

MeasurementBasis BasisPlanner::first_basis(bool random_catalog_start) {
  if (strategy_.uses_catalog()) {
    const auto& cat = *strategy_.catalog;
    std::size_t idx = 0;
    if (random_catalog_start) idx = static_cast<std::size_t>(rng_() % cat.size());
    cycle_index_ = idx;
    previous_ = cat[idx];
    return cat[idx];
  }
  previous_ = haar_random_basis(dim_, rng_);
  return *previous_;
}

MeasurementBasis BasisPlanner::next_basis(const MeasurementRecord& record, const BlochMoments* bloch) {
  last_report_.reset();
  switch (strategy_.kind) {
    case Strategy::Kind::RandomHaarBasis:
      previous_ = haar_random_basis(dim_, rng_);
      break;
    case Strategy::Kind::RestrictedNonadaptiveCycle: {
      const auto& cat = *strategy_.catalog;
      cycle_index_ = (cycle_index_ + 1) % cat.size();
      previous_ = cat[cycle_index_];
      break;
    }
    case Strategy::Kind::RestrictedAdaptive:
      last_report_ = optimize_from_catalog(record, *strategy_.catalog, moments_);
      previous_ = last_report_->best_basis;
      break;
    case Strategy::Kind::AdaptiveContinuous: {
      const BlochMoments bm = bloch ? *bloch : evaluate_bloch_moments(record, moments_);
      last_report_ = optimize_qubit_basis(bm, rng_, optimizer_, previous_);
      previous_ = last_report_->best_basis;
      break;
    }
  }
  return *previous_;
}

}  // namespace fidest
