#include "fidest/quantum/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "fidest/quantum/errors.hpp"

namespace fidest {
namespace {

constexpr int kMaxSweeps = 64;

double off_diagonal_norm2(const ComplexMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) s += std::norm(a(i, j));
  return s;
}

// One unitary Jacobi rotation annihilating a(p, q).
void rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q) {
  const Complex apq = a(p, q);
  const double b = std::abs(apq);
  const Complex phase = apq / b;  // e^{i alpha}
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();

  const double theta = (aqq - app) / (2.0 * b);
  const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  // G = [[c, s], [-s e^{-i alpha}, c e^{-i alpha}]] on the (p, q) plane.
  const Complex gqp = -s * std::conj(phase);
  const Complex gqq = c * std::conj(phase);
  const std::size_t n = a.rows();

  for (std::size_t r = 0; r < n; ++r) {
    const Complex x = a(r, p);
    const Complex y = a(r, q);
    a(r, p) = c * x + gqp * y;
    a(r, q) = s * x + gqq * y;
  }
  for (std::size_t col = 0; col < n; ++col) {
    const Complex x = a(p, col);
    const Complex y = a(q, col);
    a(p, col) = c * x + std::conj(gqp) * y;
    a(q, col) = s * x + std::conj(gqq) * y;
  }
  for (std::size_t r = 0; r < n; ++r) {
    const Complex x = v(r, p);
    const Complex y = v(r, q);
    v(r, p) = c * x + gqp * y;
    v(r, q) = s * x + gqq * y;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = a(p, p).real();
  a(q, q) = a(q, q).real();
}

}  // namespace

EigenSystem hermitian_eigensystem(const HermitianMatrix& h) {
  const std::size_t n = h.dim();
  if (n > kMaxEigenDim) throw ValidationError("hermitian_eigensystem: dimension exceeds 16");

  ComplexMatrix a = h.matrix();
  ComplexMatrix v = ComplexMatrix::identity(n);
  const double scale2 = std::max(std::norm(a.frobenius_norm()), 1e-300);

  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (off_diagonal_norm2(a) <= 1e-32 * scale2) break;
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q)
        if (std::abs(a(p, q)) > 1e-300) rotate(a, v, p, q);
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return a(i, i).real() > a(j, j).real();
  });

  EigenSystem out;
  out.values.reserve(n);
  out.vectors.reserve(n);
  for (std::size_t idx : order) {
    out.values.push_back(a(idx, idx).real());
    std::vector<Complex> col(n);
    for (std::size_t r = 0; r < n; ++r) col[r] = v(r, idx);
    out.vectors.push_back(PureState::normalized(std::move(col)).with_canonical_phase());
  }
  return out;
}

Eigenpair top_eigenpair(const HermitianMatrix& a) {
  auto sys = hermitian_eigensystem(a);
  return {sys.values.front(), std::move(sys.vectors.front())};
}

Eigenpair top_eigenpair(const ComplexMatrix& a) { return top_eigenpair(HermitianMatrix(a)); }

}  // namespace fidest
