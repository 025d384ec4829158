#include "fidest/closedform/bloch_moments.hpp"

#include <cmath>
#include <numbers>

#include "fidest/quantum/errors.hpp"

namespace fidest {
namespace {

double norm3(const Vec3& v) { return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]); }

// Moment (mass I + first . sigma) / 2 in the computational basis.
PosteriorMoment bloch_form(double mass, const Vec3& first, std::size_t k) {
  ComplexMatrix m(2, 2);
  m(0, 0) = 0.5 * (mass + first[2]);
  m(1, 1) = 0.5 * (mass - first[2]);
  m(0, 1) = Complex(0.5 * first[0], -0.5 * first[1]);
  m(1, 0) = Complex(0.5 * first[0], 0.5 * first[1]);
  auto h = HermitianMatrix::hermitize(m);
  return {std::move(h), mass, k};
}

// (Tr sigma_x A, Tr sigma_y A, Tr sigma_z A)
Vec3 pauli_components(const HermitianMatrix& a) {
  return {2.0 * a(0, 1).real(), -2.0 * a(0, 1).imag(), (a(0, 0) - a(1, 1)).real()};
}

}  // namespace

PosteriorMoment BlochMoments::to_posterior_moment(std::size_t k) const {
  return bloch_form(mass, first, k);
}

PosteriorMoment BlochMoments::appended_moment(const Vec3& u, std::size_t k) const {
  Vec3 b{};
  double a = mass;
  for (int i = 0; i < 3; ++i) {
    a += u[i] * first[i];
    b[i] = first[i] + second[i][0] * u[0] + second[i][1] * u[1] + second[i][2] * u[2];
  }
  return bloch_form(0.5 * a, {0.5 * b[0], 0.5 * b[1], 0.5 * b[2]}, k + 1);
}

double BlochMoments::basis_score(const Vec3& u) const {
  Vec3 plus{};
  Vec3 minus{};
  for (int i = 0; i < 3; ++i) {
    const double su = second[i][0] * u[0] + second[i][1] * u[1] + second[i][2] * u[2];
    plus[i] = first[i] + su;
    minus[i] = first[i] - su;
  }
  return 0.25 * (2.0 * mass + norm3(plus) + norm3(minus)) / mass;
}

BlochMoments closedform_bloch_moments(const PauliCounts& counts) {
  BlochMoments out;
  out.mass = pauli_monomial_integral(counts);
  out.first = {pauli_monomial_integral(counts, {.sin_theta = 1, .cos_phi = 1}),
               pauli_monomial_integral(counts, {.sin_theta = 1, .sin_phi = 1}),
               pauli_monomial_integral(counts, {.cos_theta = 1})};
  const double xx = pauli_monomial_integral(counts, {.sin_theta = 2, .cos_phi = 2});
  const double yy = pauli_monomial_integral(counts, {.sin_theta = 2, .sin_phi = 2});
  const double zz = pauli_monomial_integral(counts, {.cos_theta = 2});
  const double xy = pauli_monomial_integral(counts, {.sin_theta = 2, .cos_phi = 1, .sin_phi = 1});
  const double xz = pauli_monomial_integral(counts, {.cos_theta = 1, .sin_theta = 1, .cos_phi = 1});
  const double yz = pauli_monomial_integral(counts, {.cos_theta = 1, .sin_theta = 1, .sin_phi = 1});
  out.second = {Vec3{xx, xy, xz}, Vec3{xy, yy, yz}, Vec3{xz, yz, zz}};
  return out;
}

BlochMoments permanent_bloch_moments(const MeasurementRecord& record) {
  if (record.dim() != 2) throw DimensionMismatch("permanent_bloch_moments: qubit record required");
  const auto base = unnormalized_moment(record);
  BlochMoments out;
  out.mass = base.norm;
  out.first = pauli_components(base.matrix);
  // Appending the +axis state a gives Tr(sigma_b .) = (first_b + second_ab) / 2.
  static const std::array<std::size_t, 3> axis_state{2, 4, 0};  // +, +i, up
  for (int a = 0; a < 3; ++a) {
    const auto ext = unnormalized_moment(record.with_appended(pauli_states()[axis_state[a]]));
    const Vec3 comp = pauli_components(ext.matrix);
    for (int b = 0; b < 3; ++b) out.second[a][b] = 2.0 * comp[b] - out.first[b];
  }
  for (int a = 0; a < 3; ++a)
    for (int b = a + 1; b < 3; ++b) {
      const double s = 0.5 * (out.second[a][b] + out.second[b][a]);
      out.second[a][b] = s;
      out.second[b][a] = s;
    }
  return out;
}

BlochMoments planar_bloch_moments(const MeasurementRecord& record, std::size_t grid_points) {
  PriorSpec::planar_qubit().validate(record.dim());
  if (grid_points == 0) throw ValidationError("planar_bloch_moments: grid must be non-empty");
  std::vector<Vec3> dirs;
  for (const auto& s : record.outcomes()) dirs.push_back(bloch_vector(s));
  const double w = 1.0 / static_cast<double>(grid_points);
  BlochMoments out;
  for (std::size_t g = 0; g < grid_points; ++g) {
    const double phi = 2.0 * std::numbers::pi * static_cast<double>(g) * w;
    const Vec3 n{std::cos(phi), std::sin(phi), 0.0};
    double like = w;
    for (const auto& u : dirs) like *= 0.5 * (1.0 + u[0] * n[0] + u[1] * n[1] + u[2] * n[2]);
    out.mass += like;
    for (int a = 0; a < 3; ++a) {
      out.first[a] += like * n[a];
      for (int b = 0; b < 3; ++b) out.second[a][b] += like * n[a] * n[b];
    }
  }
  return out;
}

}  // namespace fidest
