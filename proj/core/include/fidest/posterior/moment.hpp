#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "fidest/posterior/record.hpp"
#include "fidest/quantum/complex_matrix.hpp"
#include "fidest/quantum/state.hpp"

namespace fidest {

// Prior density p(psi) over pure states.
//  Uniform:     constant (Haar).
//  PlanarQubit: p ~ delta(theta - pi/2), qubit states on the x-y great circle.
struct PriorSpec {
  enum class Kind { Uniform, PlanarQubit };
  Kind kind = Kind::Uniform;

  static PriorSpec uniform() { return {Kind::Uniform}; }
  static PriorSpec planar_qubit() { return {Kind::PlanarQubit}; }

  // Throws ValidationError when PlanarQubit is paired with dim != 2.
  void validate(std::size_t dim) const;

  bool operator==(const PriorSpec&) const = default;
};

// Unnormalized posterior moment
//   matrix = integral dpsi p(psi) prod_m |<phi_m|psi>|^2 |psi><psi|,
//   norm   = trace(matrix) = integral dpsi p(psi) prod_m |<phi_m|psi>|^2,
// with the prior normalized to total mass 1. Always expressed in the
// computational basis.
struct PosteriorMoment {
  HermitianMatrix matrix;
  double norm;
  std::size_t k;

  // matrix / norm, hermitized.
  HermitianMatrix normalized() const;
};

// Exact moment under the uniform prior from permanents of the bordered
// (k+1) x (k+1) Gram matrices:
//   moment(i, j) = (d-1)! / (k+d)! * Per [[G, c_j], [r_i, delta_ij]]
// with c_j(a) = <phi_a|z_j>, r_i(b) = <z_i|phi_b>.
// Throws SizeLimitExceeded when k + 1 exceeds the permanent cap.
PosteriorMoment unnormalized_moment(const MeasurementRecord& record);

inline constexpr std::size_t kPlanarGridPoints = 2048;

// Moment under the PlanarQubit prior by uniform quadrature on phi in [0, 2pi).
PosteriorMoment planar_moment(const MeasurementRecord& record,
                              std::size_t grid_points = kPlanarGridPoints);

// Dispatches on the prior: permanents for Uniform, planar quadrature otherwise.
PosteriorMoment posterior_moment(const MeasurementRecord& record, const PriorSpec& prior);

struct MostLikelyState {
  PureState state;
  double fidelity;  // top eigenvalue of the normalized posterior state
};

HermitianMatrix normalized_state(const MeasurementRecord& record,
                                 const PriorSpec& prior = PriorSpec::uniform());

MostLikelyState most_likely_state(const PosteriorMoment& moment);
MostLikelyState most_likely_state(const MeasurementRecord& record,
                                  const PriorSpec& prior = PriorSpec::uniform());

// P(candidate | record) = <e|rho|e>.
double outcome_probability(const PosteriorMoment& moment, const PureState& candidate);
double outcome_probability(const MeasurementRecord& record, const PureState& candidate,
                           const PriorSpec& prior = PriorSpec::uniform());

// Tr[rho^2].
double purity(const PosteriorMoment& moment);
double purity(const MeasurementRecord& record, const PriorSpec& prior = PriorSpec::uniform());

// prod_m |<phi_m|psi(pi/2, phi)>|^2 at each grid angle. Requires d = 2 and
// the PlanarQubit prior; the caller normalizes.
std::vector<double> planar_posterior_density(const MeasurementRecord& record,
                                             const PriorSpec& prior,
                                             std::span<const double> phi_grid);

}  // namespace fidest
