#pragma once

#include <cstddef>

#include "fidest/quantum/random.hpp"
#include "fidest/quantum/state.hpp"

namespace fidest {

// Unitarily invariant random pure state: 2d standard normals, normalized.
PureState haar_random_state(std::size_t dim, RandomSource& rng);

// Columns of a Haar unitary: Ginibre matrix orthonormalized by modified
// Gram-Schmidt, with R's diagonal positive real.
MeasurementBasis haar_random_basis(std::size_t dim, RandomSource& rng);

ComplexMatrix haar_random_unitary(std::size_t dim, RandomSource& rng);

}  // namespace fidest
