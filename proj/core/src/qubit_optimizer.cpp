#include "fidest/optimizer/qubit_optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "fidest/quantum/bloch.hpp"
#include "fidest/quantum/errors.hpp"
#include "fidest/quantum/haar.hpp"

namespace fidest {
namespace {

Vec3 direction(double theta, double phi) {
  return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
}

MeasurementBasis basis_from_params(std::span<const double> x) {
  const auto angles = state_to_bloch(qubit_state(x[0], x[1]));
  return qubit_basis(angles.theta, angles.phi);
}

double overlap_gap(const MeasurementBasis& a, const MeasurementBasis& b) {
  const double f = fidelity(a[0], b[0]);
  return std::min(f, 1.0 - f);
}

}  // namespace

OptimizationReport optimize_qubit_basis(const BlochMoments& moments, RandomSource& rng,
                                        const OptimizerSettings& settings,
                                        const std::optional<MeasurementBasis>& seed_basis) {
  if (seed_basis && seed_basis->dim() != 2) throw DimensionMismatch("optimize_qubit_basis: seed basis must be a qubit basis");
  const Objective objective = [&moments](std::span<const double> x) {
    return moments.basis_score(direction(x[0], x[1]));
  };

  std::vector<std::vector<double>> starts;
  if (seed_basis) {
    const auto a = state_to_bloch((*seed_basis)[0]);
    starts.push_back({a.theta, a.phi});
  }
  for (std::size_t r = 0; r < settings.restarts; ++r) {
    const auto a = state_to_bloch(haar_random_state(2, rng));
    starts.push_back({a.theta, a.phi});
  }
  if (starts.empty()) throw ValidationError("optimize_qubit_basis: need at least one start");

  std::vector<RestartOutcome> outcomes;
  outcomes.reserve(starts.size());
  for (auto& s : starts) {
    const auto res = maximize_conjugate_gradient(objective, s, settings.cg);
    auto basis = basis_from_params(res.x);
    // Score the canonical basis so the report is self-consistent.
    const double score = moments.basis_score(bloch_vector(basis[0]));
    outcomes.push_back({std::move(basis), score, res.iterations, res.converged});
  }

  std::size_t best = 0;
  for (std::size_t i = 1; i < outcomes.size(); ++i)
    if (outcomes[i].score > outcomes[best].score) best = i;

  OptimizationReport report{outcomes[best].basis, outcomes[best].score};
  report.restarts_used = outcomes.size();
  report.converged = outcomes[best].converged;
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    if (i == best) continue;
    if (outcomes[i].score >= outcomes[best].score - settings.degeneracy_score_tol &&
        overlap_gap(outcomes[i].basis, outcomes[best].basis) > settings.degeneracy_overlap_gap) {
      report.degenerate = true;
      break;
    }
  }
  report.restart_optima = std::move(outcomes);
  return report;
}

OptimizationReport optimize_qubit_basis(const MeasurementRecord& record, RandomSource& rng,
                                        const OptimizerSettings& settings,
                                        const std::optional<MeasurementBasis>& seed_basis,
                                        const MomentPolicy& policy) {
  if (record.dim() != 2) throw DimensionMismatch("optimize_qubit_basis: qubit record required");
  return optimize_qubit_basis(evaluate_bloch_moments(record, policy), rng, settings, seed_basis);
}

}  // namespace fidest
