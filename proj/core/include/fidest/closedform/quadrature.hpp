#pragma once

#include <cstddef>
#include <vector>

#include "fidest/posterior/moment.hpp"
#include "fidest/posterior/record.hpp"

namespace fidest {

struct QuadratureGrid {
  std::size_t n_theta = 128;
  std::size_t n_phi = 256;

  bool operator==(const QuadratureGrid&) const = default;
};

// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendre {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Cached per order; safe to call from several threads.
const GaussLegendre& gauss_legendre(std::size_t order);

// Quadrature estimate of the unnormalized qubit moment: Gauss-Legendre in
// cos(theta) (which absorbs the sin(theta) Jacobian) times a uniform phi grid.
// Polynomial integrands of the record's degree are integrated exactly while
// k stays well below n_theta and n_phi.
PosteriorMoment quadrature_moment(const MeasurementRecord& record, QuadratureGrid grid = {});

}  // namespace fidest
