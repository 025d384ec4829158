#include "fidest/posterior/moment.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "fidest/quantum/eigen.hpp"
#include "fidest/quantum/errors.hpp"
#include "fidest/quantum/permanent.hpp"

namespace fidest {

void PriorSpec::validate(std::size_t dim) const {
  if (kind == Kind::PlanarQubit && dim != 2)
    throw ValidationError("PlanarQubit prior is defined only for d = 2");
}

HermitianMatrix PosteriorMoment::normalized() const {
  if (!(norm > 0.0)) throw ValidationError("posterior moment has non-positive normalization");
  return HermitianMatrix::hermitize(matrix.matrix() * Complex(1.0 / norm));
}

PosteriorMoment unnormalized_moment(const MeasurementRecord& record) {
  const std::size_t d = record.dim();
  const std::size_t k = record.size();
  if (k + 1 > kPermanentSizeCap)
    throw SizeLimitExceeded("unnormalized_moment: record length " + std::to_string(k) +
                            " needs a permanent beyond the cap; use a quadrature route");

  // (d-1)! / (k+d)!
  const double prefactor =
      std::exp(std::lgamma(static_cast<double>(d)) - std::lgamma(static_cast<double>(k + d + 1)));

  const ComplexMatrix& gram = record.gram();
  const auto& phis = record.outcomes();
  ComplexMatrix bordered(k + 1, k + 1);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) bordered(a, b) = gram(a, b);

  ComplexMatrix m(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i; j < d; ++j) {
      for (std::size_t a = 0; a < k; ++a) {
        bordered(a, k) = std::conj(phis[a][j]);  // <phi_a|z_j>
        bordered(k, a) = phis[a][i];             // <z_i|phi_a>
      }
      bordered(k, k) = (i == j) ? 1.0 : 0.0;
      const Complex v = prefactor * permanent(bordered);
      m(i, j) = v;
      m(j, i) = std::conj(v);
    }
  }
  auto h = HermitianMatrix::hermitize(m);
  const double norm = h.trace();
  return {std::move(h), norm, k};
}

PosteriorMoment planar_moment(const MeasurementRecord& record, std::size_t grid_points) {
  PriorSpec::planar_qubit().validate(record.dim());
  if (grid_points == 0) throw ValidationError("planar_moment: grid must be non-empty");
  const double w = 1.0 / static_cast<double>(grid_points);
  const double r = 1.0 / std::sqrt(2.0);
  double m00 = 0.0;
  double m11 = 0.0;
  Complex m01{};
  for (std::size_t g = 0; g < grid_points; ++g) {
    const double phi = 2.0 * std::numbers::pi * static_cast<double>(g) * w;
    const Complex a(r, 0.0);
    const Complex b = std::polar(r, phi);
    double like = w;
    for (const auto& s : record.outcomes()) like *= std::norm(std::conj(s[0]) * a + std::conj(s[1]) * b);
    m00 += like * std::norm(a);
    m11 += like * std::norm(b);
    m01 += like * a * std::conj(b);
  }
  ComplexMatrix m(2, 2);
  m(0, 0) = m00;
  m(1, 1) = m11;
  m(0, 1) = m01;
  m(1, 0) = std::conj(m01);
  auto h = HermitianMatrix::hermitize(m);
  const double norm = h.trace();
  return {std::move(h), norm, record.size()};
}

PosteriorMoment posterior_moment(const MeasurementRecord& record, const PriorSpec& prior) {
  prior.validate(record.dim());
  if (prior.kind == PriorSpec::Kind::PlanarQubit) return planar_moment(record);
  return unnormalized_moment(record);
}

HermitianMatrix normalized_state(const MeasurementRecord& record, const PriorSpec& prior) {
  return posterior_moment(record, prior).normalized();
}

MostLikelyState most_likely_state(const PosteriorMoment& moment) {
  auto top = top_eigenpair(moment.normalized());
  return {std::move(top.vector), top.value};
}

MostLikelyState most_likely_state(const MeasurementRecord& record, const PriorSpec& prior) {
  return most_likely_state(posterior_moment(record, prior));
}

double outcome_probability(const PosteriorMoment& moment, const PureState& candidate) {
  return expectation(moment.normalized(), candidate);
}

double outcome_probability(const MeasurementRecord& record, const PureState& candidate,
                           const PriorSpec& prior) {
  return outcome_probability(posterior_moment(record, prior), candidate);
}

double purity(const PosteriorMoment& moment) {
  const auto rho = moment.normalized();
  double s = 0.0;
  for (std::size_t i = 0; i < rho.dim(); ++i)
    for (std::size_t j = 0; j < rho.dim(); ++j) s += std::norm(rho(i, j));
  return s;
}

double purity(const MeasurementRecord& record, const PriorSpec& prior) {
  return purity(posterior_moment(record, prior));
}

std::vector<double> planar_posterior_density(const MeasurementRecord& record,
                                             const PriorSpec& prior,
                                             std::span<const double> phi_grid) {
  if (record.dim() != 2) throw DimensionMismatch("planar_posterior_density: qubit record required");
  if (prior.kind != PriorSpec::Kind::PlanarQubit)
    throw ValidationError("planar_posterior_density: PlanarQubit prior required");
  std::vector<double> out;
  out.reserve(phi_grid.size());
  const double r = 1.0 / std::sqrt(2.0);
  for (double phi : phi_grid) {
    const Complex a(r, 0.0);
    const Complex b = std::polar(r, phi);
    double like = 1.0;
    for (const auto& s : record.outcomes()) like *= std::norm(std::conj(s[0]) * a + std::conj(s[1]) * b);
    out.push_back(like);
  }
  return out;
}

}  // namespace fidest
