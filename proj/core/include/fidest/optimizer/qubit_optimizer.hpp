#pragma once

#include <cstddef>
#include <optional>

#include "fidest/closedform/bloch_moments.hpp"
#include "fidest/optimizer/basis_score.hpp"
#include "fidest/optimizer/conjugate_gradient.hpp"
#include "fidest/optimizer/moment_policy.hpp"
#include "fidest/quantum/random.hpp"

namespace fidest {

struct OptimizerSettings {
  std::size_t restarts = 8;
  CgSettings cg{};
  double degeneracy_score_tol = 1e-8;
  double degeneracy_overlap_gap = 1e-3;
};

// Maximizes the basis score over qubit bases {|n>, |-n>}, parameterized by
// the Bloch angles of |n>. Each start runs nonlinear CG; starts are the seed
// basis (if given) followed by `restarts` Haar-random directions drawn from
// rng. The report flags degeneracy when another start reaches the best score
// within degeneracy_score_tol at a basis whose overlap gap
// min(|<a|b>|^2, 1 - |<a|b>|^2) to the best exceeds degeneracy_overlap_gap.
OptimizationReport optimize_qubit_basis(const BlochMoments& moments, RandomSource& rng,
                                        const OptimizerSettings& settings = {},
                                        const std::optional<MeasurementBasis>& seed_basis = std::nullopt);

OptimizationReport optimize_qubit_basis(const MeasurementRecord& record, RandomSource& rng,
                                        const OptimizerSettings& settings = {},
                                        const std::optional<MeasurementBasis>& seed_basis = std::nullopt,
                                        const MomentPolicy& policy = {});

}  // namespace fidest
