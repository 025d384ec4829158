#pragma once

#include <cstddef>
#include <vector>

#include "fidest/quantum/complex_matrix.hpp"
#include "fidest/quantum/state.hpp"

namespace fidest {

inline constexpr std::size_t kMaxEigenDim = 16;

struct EigenSystem {
  std::vector<double> values;      // descending
  std::vector<PureState> vectors;  // vectors[i] pairs with values[i], canonical phase
};

struct Eigenpair {
  double value;
  PureState vector;
};

// Full spectrum of a Hermitian matrix by cyclic complex Jacobi rotations.
// Degenerate eigenvalues keep the order produced by the fixed sweep, so the
// returned vector for a degenerate top eigenvalue is arbitrary but reproducible.
EigenSystem hermitian_eigensystem(const HermitianMatrix& a);

Eigenpair top_eigenpair(const HermitianMatrix& a);

// Validating overload: throws ValidationError for a non-Hermitian input.
Eigenpair top_eigenpair(const ComplexMatrix& a);

}  // namespace fidest
