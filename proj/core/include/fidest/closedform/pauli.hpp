#pragma once

#include <array>
#include <cstddef>
#include <optional>

#include "fidest/posterior/moment.hpp"
#include "fidest/posterior/record.hpp"

namespace fidest {

// Multiplicities of the six Pauli outcomes, ordered up, down, +, -, +i, -i.
struct PauliCounts {
  std::array<unsigned, 6> m{};

  unsigned total() const noexcept { return m[0] + m[1] + m[2] + m[3] + m[4] + m[5]; }

  // Counts of a qubit record whose outcomes are all Pauli eigenstates (up to
  // phase, fidelity within 1e-12); nullopt otherwise.
  static std::optional<PauliCounts> from_record(const MeasurementRecord& record);

  // Index in pauli_states() matching the state, or nullopt.
  static std::optional<std::size_t> classify(const PureState& state);

  MeasurementRecord to_record() const;

  PauliCounts plus(std::size_t which, unsigned n = 1) const {
    PauliCounts c = *this;
    c.m[which] += n;
    return c;
  }

  bool operator==(const PauliCounts&) const = default;
};

// Binomial-sum cost guard: the expansion has prod (m_i + 1) terms.
inline constexpr unsigned kClosedFormCountCap = 60;

// Exponents of an extra monomial cos^a(theta) sin^b(theta) cos^c(phi) sin^e(phi)
// multiplying the likelihood inside the integral.
struct Monomial {
  unsigned cos_theta = 0;
  unsigned sin_theta = 0;
  unsigned cos_phi = 0;
  unsigned sin_phi = 0;
};

// int_0^pi cos^m(t) sin^n(t) dt by the Gamma-function formula; exactly 0
// for odd m.
long double theta_power_integral(unsigned m, unsigned n);

// int_0^{2pi} cos^m(p) sin^n(p) dp; exactly 0 unless m and n are both even.
long double phi_power_integral(unsigned m, unsigned n);

// integral dpsi prod_m |<phi_m|psi>|^2 * monomial, with
// dpsi = sin(theta) dtheta dphi / (4 pi). Throws SizeLimitExceeded above the cap.
double pauli_monomial_integral(const PauliCounts& counts, const Monomial& extra = {});

// integral dP_k for a Pauli-restricted record.
double closedform_norm(const PauliCounts& counts);

// Unnormalized 2x2 moment for a Pauli-restricted record.
PosteriorMoment closedform_moment(const PauliCounts& counts);

}  // namespace fidest
