#pragma once

#include <cstddef>

#include "fidest/quantum/complex_matrix.hpp"

namespace fidest {

// Largest matrix order accepted by permanent(). Ryser's formula costs
// O(2^n n); beyond this callers must use a quadrature or closed-form route.
inline constexpr std::size_t kPermanentSizeCap = 30;

// Per(M) = sum over permutations s of prod_i M(i, s(i)), evaluated with
// Ryser's inclusion-exclusion formula in Gray-code subset order.
//
// Throws DimensionMismatch for non-square or empty input and
// SizeLimitExceeded when the order exceeds kPermanentSizeCap.
Complex permanent(const ComplexMatrix& m);

}  // namespace fidest
