#pragma once

#include <array>

#include "fidest/quantum/state.hpp"

namespace fidest {

using Vec3 = std::array<double, 3>;

struct BlochAngles {
  double theta;  // polar, [0, pi]
  double phi;    // azimuthal, [0, 2 pi)
};

// cos(theta/2)|up> + e^{i phi} sin(theta/2)|down>.
// Throws ValidationError for theta outside [0, pi] or phi outside [0, 2 pi).
PureState bloch_to_state(double theta, double phi);

// Same parameterization with no range check; any real angles are accepted.
PureState qubit_state(double theta, double phi);

// Angles of a qubit state's Bloch vector, phi wrapped into [0, 2 pi).
BlochAngles state_to_bloch(const PureState& psi);

// (<sigma_x>, <sigma_y>, <sigma_z>) of a qubit state.
Vec3 bloch_vector(const PureState& psi);

// Qubit state whose Bloch vector points along the given (nonzero) direction.
PureState state_from_bloch_vector(const Vec3& n);

// Basis {|n>, |-n>} whose first vector has the given angles. The second
// vector carries the canonical phase convention.
MeasurementBasis qubit_basis(double theta, double phi, std::string label = {});

// The six Pauli eigenstates in the order up, down, +, -, +i, -i.
const std::array<PureState, 6>& pauli_states();

}  // namespace fidest
