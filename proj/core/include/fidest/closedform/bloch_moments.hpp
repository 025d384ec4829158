#pragma once

#include <array>

#include "fidest/closedform/pauli.hpp"
#include "fidest/closedform/quadrature.hpp"
#include "fidest/posterior/moment.hpp"
#include "fidest/quantum/bloch.hpp"

namespace fidest {

using Mat3 = std::array<Vec3, 3>;

// Zeroth, first and second Bloch-vector moments of the unnormalized qubit
// posterior:
//   mass   = integral dP,
//   first  = integral dP n,
//   second = integral dP n n^T,
// where n is the Bloch vector of psi. These determine the posterior moment
//   (mass I + first . sigma) / 2
// and, for a hypothetical outcome with Bloch vector u, the moment after
// appending it: (1/4)[(mass + u.first) I + (first + second u) . sigma].
struct BlochMoments {
  double mass = 0.0;
  Vec3 first{};
  Mat3 second{};

  PosteriorMoment to_posterior_moment(std::size_t k) const;

  // Moment of the record extended by the qubit outcome with Bloch vector u.
  PosteriorMoment appended_moment(const Vec3& u, std::size_t k) const;

  // sum_{s=+-} lambda_max of the appended moments for the basis {u, -u},
  // divided by mass.
  double basis_score(const Vec3& u) const;
};

// Exact, from the Pauli closed form.
BlochMoments closedform_bloch_moments(const PauliCounts& counts);

// Exact up to rounding for k well below the grid orders.
BlochMoments quadrature_bloch_moments(const MeasurementRecord& record, QuadratureGrid grid = {});

// From permanents of the record and of the record extended by each axis
// state. Requires record.size() + 2 <= permanent cap.
BlochMoments permanent_bloch_moments(const MeasurementRecord& record);

// Under the PlanarQubit prior, by uniform quadrature on the x-y great circle.
BlochMoments planar_bloch_moments(const MeasurementRecord& record,
                                  std::size_t grid_points = kPlanarGridPoints);

}  // namespace fidest
