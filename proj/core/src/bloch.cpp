#include "fidest/quantum/bloch.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "fidest/quantum/errors.hpp"

namespace fidest {

using std::numbers::pi;

PureState qubit_state(double theta, double phi) {
  return PureState::normalized({Complex(std::cos(theta / 2), 0.0),
                                std::polar(1.0, phi) * std::sin(theta / 2)});
}

PureState bloch_to_state(double theta, double phi) {
  if (!(theta >= 0.0 && theta <= pi)) throw ValidationError("bloch_to_state: theta outside [0, pi]");
  if (!(phi >= 0.0 && phi < 2 * pi)) throw ValidationError("bloch_to_state: phi outside [0, 2pi)");
  return qubit_state(theta, phi);
}

Vec3 bloch_vector(const PureState& psi) {
  if (psi.dim() != 2) throw DimensionMismatch("bloch_vector: qubit state required");
  const Complex a = psi[0];
  const Complex b = psi[1];
  const Complex ab = std::conj(a) * b;
  return {2.0 * ab.real(), 2.0 * ab.imag(), std::norm(a) - std::norm(b)};
}

BlochAngles state_to_bloch(const PureState& psi) {
  const Vec3 n = bloch_vector(psi);
  const double theta = std::acos(std::clamp(n[2], -1.0, 1.0));
  double phi = std::atan2(n[1], n[0]);
  if (phi < 0) phi += 2 * pi;
  if (phi >= 2 * pi) phi = 0.0;
  return {theta, phi};
}

PureState state_from_bloch_vector(const Vec3& n) {
  const double r = std::sqrt(n[0] * n[0] + n[1] * n[1] + n[2] * n[2]);
  if (r == 0.0) throw ValidationError("state_from_bloch_vector: zero vector");
  const double theta = std::acos(std::clamp(n[2] / r, -1.0, 1.0));
  const double phi = std::atan2(n[1], n[0]);
  return qubit_state(theta, phi);
}

MeasurementBasis qubit_basis(double theta, double phi, std::string label) {
  PureState first = qubit_state(theta, phi);
  PureState second = PureState::normalized(
                         {Complex(std::sin(theta / 2), 0.0), -std::polar(1.0, phi) * std::cos(theta / 2)})
                         .with_canonical_phase();
  return MeasurementBasis({std::move(first), std::move(second)}, std::move(label));
}

const std::array<PureState, 6>& pauli_states() {
  static const std::array<PureState, 6> states = [] {
    const double r = 1.0 / std::sqrt(2.0);
    const Complex i(0.0, 1.0);
    return std::array<PureState, 6>{
        PureState::basis_vector(2, 0),
        PureState::basis_vector(2, 1),
        PureState::normalized({r, r}),
        PureState::normalized({r, -r}),
        PureState::normalized({r, i * r}),
        PureState::normalized({r, -i * r}),
    };
  }();
  return states;
}

}  // namespace fidest
