#include "fidest/quantum/state.hpp"

#include <algorithm>
#include <cmath>

#include "fidest/quantum/errors.hpp"

namespace fidest {
namespace {

double squared_norm(std::span<const Complex> v) {
  double s = 0.0;
  for (const auto& z : v) s += std::norm(z);
  return s;
}

void require_finite(std::span<const Complex> v) {
  for (const auto& z : v)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      throw ValidationError("state amplitudes must be finite");
}

}  // namespace

PureState::PureState(std::vector<Complex> amplitudes) : amps_(std::move(amplitudes)) {
  if (amps_.empty()) throw ValidationError("PureState: dimension must be positive");
  require_finite(amps_);
  if (std::abs(squared_norm(amps_) - 1.0) > kNormTolerance)
    throw ValidationError("PureState: amplitudes are not normalized");
}

PureState PureState::normalized(std::vector<Complex> amplitudes) {
  if (amplitudes.empty()) throw ValidationError("PureState: dimension must be positive");
  require_finite(amplitudes);
  const double n = std::sqrt(squared_norm(amplitudes));
  if (n == 0.0) throw ValidationError("PureState: cannot normalize the zero vector");
  for (auto& z : amplitudes) z /= n;
  return PureState(std::move(amplitudes), Trusted{});
}

PureState PureState::basis_vector(std::size_t dim, std::size_t index) {
  if (dim == 0 || index >= dim) throw ValidationError("basis_vector: index out of range");
  std::vector<Complex> v(dim);
  v[index] = 1.0;
  return PureState(std::move(v), Trusted{});
}

PureState PureState::with_canonical_phase() const {
  auto v = amps_;
  for (const auto& z : v) {
    if (std::abs(z) > 1e-14) {
      const Complex phase = std::conj(z) / std::abs(z);
      for (auto& w : v) w *= phase;
      break;
    }
  }
  return PureState(std::move(v), Trusted{});
}

PureState PureState::with_global_phase(double radians) const {
  auto v = amps_;
  const Complex phase = std::polar(1.0, radians);
  for (auto& w : v) w *= phase;
  return PureState(std::move(v), Trusted{});
}

Complex inner(const PureState& a, const PureState& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("inner: states have different dimensions");
  Complex s{};
  for (std::size_t i = 0; i < a.dim(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

double fidelity(const PureState& a, const PureState& b) { return std::norm(inner(a, b)); }

PureState apply(const ComplexMatrix& unitary, const PureState& psi) {
  if (unitary.rows() != psi.dim() || unitary.cols() != psi.dim())
    throw DimensionMismatch("apply: operator and state dimensions differ");
  std::vector<Complex> out(psi.dim());
  for (std::size_t i = 0; i < psi.dim(); ++i)
    for (std::size_t j = 0; j < psi.dim(); ++j) out[i] += unitary(i, j) * psi[j];
  return PureState::normalized(std::move(out));
}

PureState tensor(const PureState& a, const PureState& b) {
  std::vector<Complex> out;
  out.reserve(a.dim() * b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j) out.push_back(a[i] * b[j]);
  return PureState(std::move(out), PureState::Trusted{});
}

ComplexMatrix projector(const PureState& psi) {
  ComplexMatrix p(psi.dim(), psi.dim());
  for (std::size_t i = 0; i < psi.dim(); ++i)
    for (std::size_t j = 0; j < psi.dim(); ++j) p(i, j) = psi[i] * std::conj(psi[j]);
  return p;
}

double expectation(const HermitianMatrix& a, const PureState& psi) {
  if (a.dim() != psi.dim()) throw DimensionMismatch("expectation: dimension mismatch");
  Complex s{};
  for (std::size_t i = 0; i < psi.dim(); ++i) {
    Complex row{};
    for (std::size_t j = 0; j < psi.dim(); ++j) row += a(i, j) * psi[j];
    s += std::conj(psi[i]) * row;
  }
  return s.real();
}

MeasurementBasis::MeasurementBasis(std::vector<PureState> vectors, std::string label)
    : vectors_(std::move(vectors)), label_(std::move(label)) {
  const std::size_t d = vectors_.size();
  if (d == 0) throw ValidationError("MeasurementBasis: empty basis");
  for (const auto& v : vectors_)
    if (v.dim() != d)
      throw DimensionMismatch("MeasurementBasis: need exactly d vectors of dimension d");
  for (std::size_t m = 0; m < d; ++m)
    for (std::size_t n = m + 1; n < d; ++n)
      if (std::abs(inner(vectors_[m], vectors_[n])) >= kOrthoTolerance)
        throw ValidationError("MeasurementBasis: vectors are not orthogonal");
}

ComplexMatrix MeasurementBasis::as_unitary() const {
  const std::size_t d = dim();
  ComplexMatrix u(d, d);
  for (std::size_t n = 0; n < d; ++n)
    for (std::size_t i = 0; i < d; ++i) u(i, n) = vectors_[n][i];
  return u;
}

double basis_distance(const MeasurementBasis& a, const MeasurementBasis& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("basis_distance: dimension mismatch");
  double worst_match = 1.0;
  for (const auto& u : a.vectors()) {
    double best = 0.0;
    for (const auto& v : b.vectors()) best = std::max(best, fidelity(u, v));
    worst_match = std::min(worst_match, best);
  }
  return 1.0 - worst_match;
}

}  // namespace fidest
