#include "fidest/quantum/haar.hpp"

#include <cmath>

#include "fidest/quantum/errors.hpp"

namespace fidest {

PureState haar_random_state(std::size_t dim, RandomSource& rng) {
  if (dim < 2) throw ValidationError("haar_random_state: dimension must be at least 2");
  std::vector<Complex> v(dim);
  for (auto& z : v) {
    const double re = rng.normal();
    const double im = rng.normal();
    z = {re, im};
  }
  return PureState::normalized(std::move(v));
}

ComplexMatrix haar_random_unitary(std::size_t dim, RandomSource& rng) {
  if (dim < 2) throw ValidationError("haar_random_unitary: dimension must be at least 2");
  ComplexMatrix g(dim, dim);
  for (std::size_t c = 0; c < dim; ++c)
    for (std::size_t r = 0; r < dim; ++r) {
      const double re = rng.normal();
      const double im = rng.normal();
      g(r, c) = {re, im};
    }
  // Modified Gram-Schmidt on columns; dividing by the positive column norm
  // fixes diag(R) > 0, which makes Q Haar distributed.
  for (std::size_t c = 0; c < dim; ++c) {
    for (std::size_t prev = 0; prev < c; ++prev) {
      Complex proj{};
      for (std::size_t r = 0; r < dim; ++r) proj += std::conj(g(r, prev)) * g(r, c);
      for (std::size_t r = 0; r < dim; ++r) g(r, c) -= proj * g(r, prev);
    }
    double norm = 0.0;
    for (std::size_t r = 0; r < dim; ++r) norm += std::norm(g(r, c));
    norm = std::sqrt(norm);
    for (std::size_t r = 0; r < dim; ++r) g(r, c) /= norm;
  }
  return g;
}

MeasurementBasis haar_random_basis(std::size_t dim, RandomSource& rng) {
  const ComplexMatrix u = haar_random_unitary(dim, rng);
  std::vector<PureState> vecs;
  vecs.reserve(dim);
  for (std::size_t c = 0; c < dim; ++c) {
    std::vector<Complex> col(dim);
    for (std::size_t r = 0; r < dim; ++r) col[r] = u(r, c);
    vecs.push_back(PureState::normalized(std::move(col)));
  }
  return MeasurementBasis(std::move(vecs), "haar");
}

}  // namespace fidest
