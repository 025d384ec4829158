#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fidest/quantum/complex_matrix.hpp"

namespace fidest {

// Unit vector in C^d. Amplitudes are always finite and normalized to 1e-12.
class PureState {
 public:
  static constexpr double kNormTolerance = 1e-12;

  // Validates finiteness and normalization; throws ValidationError otherwise.
  explicit PureState(std::vector<Complex> amplitudes);

  // Rescales a nonzero finite vector to unit norm.
  static PureState normalized(std::vector<Complex> amplitudes);

  // Computational basis vector |index> in dimension dim.
  static PureState basis_vector(std::size_t dim, std::size_t index);

  std::size_t dim() const noexcept { return amps_.size(); }
  std::span<const Complex> amplitudes() const noexcept { return amps_; }
  const Complex& operator[](std::size_t i) const { return amps_[i]; }

  // Same ray with the first amplitude above 1e-14 in modulus made real positive.
  PureState with_canonical_phase() const;

  PureState with_global_phase(double radians) const;

 private:
  struct Trusted {};
  PureState(std::vector<Complex> amplitudes, Trusted) : amps_(std::move(amplitudes)) {}
  friend PureState apply(const ComplexMatrix&, const PureState&);
  friend PureState tensor(const PureState&, const PureState&);

  std::vector<Complex> amps_;
};

// <a|b>
Complex inner(const PureState& a, const PureState& b);

// |<a|b>|^2
double fidelity(const PureState& a, const PureState& b);

// U|psi>, renormalized against rounding. U must be unitary.
PureState apply(const ComplexMatrix& unitary, const PureState& psi);

PureState tensor(const PureState& a, const PureState& b);

// |psi><psi|
ComplexMatrix projector(const PureState& psi);

// <psi|A|psi>
double expectation(const HermitianMatrix& a, const PureState& psi);

// Ordered orthonormal basis of C^d with an optional catalog label.
class MeasurementBasis {
 public:
  static constexpr double kOrthoTolerance = 1e-12;

  // Throws ValidationError on size/dimension mismatch or non-orthogonality.
  explicit MeasurementBasis(std::vector<PureState> vectors, std::string label = {});

  std::size_t dim() const noexcept { return vectors_.size(); }
  const std::vector<PureState>& vectors() const noexcept { return vectors_; }
  const PureState& operator[](std::size_t n) const { return vectors_[n]; }
  const std::string& label() const noexcept { return label_; }

  // Columns are the basis vectors.
  ComplexMatrix as_unitary() const;

 private:
  std::vector<PureState> vectors_;
  std::string label_;
};

// 1 - min_i max_j |<a_i|b_j>|^2. Zero for the same basis up to vector order
// and phases.
double basis_distance(const MeasurementBasis& a, const MeasurementBasis& b);

}  // namespace fidest
