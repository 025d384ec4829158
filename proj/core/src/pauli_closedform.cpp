#include "fidest/closedform/pauli.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "fidest/quantum/bloch.hpp"
#include "fidest/quantum/errors.hpp"

namespace fidest {
namespace {

// Kahan-compensated running sum.
class CompensatedSum {
 public:
  void add(long double x) {
    const long double y = x - carry_;
    const long double t = sum_ + y;
    carry_ = (t - sum_) - y;
    sum_ = t;
  }
  long double value() const { return sum_; }

 private:
  long double sum_ = 0.0L;
  long double carry_ = 0.0L;
};

// log Gamma(h / 2)
long double log_gamma_half(unsigned h) { return std::lgamma(static_cast<long double>(h) / 2.0L); }

// Coefficients of x^p in (1 + x)^plus (1 - x)^minus. Exact in long double
// for plus + minus <= 60 (largest binomial < 2^63).
std::vector<long double> signed_binomial_coefficients(unsigned plus, unsigned minus) {
  std::vector<long double> c(plus + minus + 1, 0.0L);
  c[0] = 1.0L;
  unsigned degree = 0;
  auto multiply = [&](long double sign) {
    for (unsigned p = degree + 1; p > 0; --p) c[p] += sign * c[p - 1];
    ++degree;
  };
  for (unsigned i = 0; i < plus; ++i) multiply(1.0L);
  for (unsigned i = 0; i < minus; ++i) multiply(-1.0L);
  return c;
}

}  // namespace

std::optional<std::size_t> PauliCounts::classify(const PureState& state) {
  if (state.dim() != 2) return std::nullopt;
  const auto& ps = pauli_states();
  for (std::size_t i = 0; i < ps.size(); ++i)
    if (fidelity(ps[i], state) > 1.0 - 1e-12) return i;
  return std::nullopt;
}

std::optional<PauliCounts> PauliCounts::from_record(const MeasurementRecord& record) {
  if (record.dim() != 2) return std::nullopt;
  PauliCounts counts;
  for (const auto& s : record.outcomes()) {
    const auto idx = classify(s);
    if (!idx) return std::nullopt;
    ++counts.m[*idx];
  }
  return counts;
}

MeasurementRecord PauliCounts::to_record() const {
  MeasurementRecord record(2);
  for (std::size_t i = 0; i < 6; ++i)
    for (unsigned n = 0; n < m[i]; ++n) record.append(pauli_states()[i]);
  return record;
}

long double theta_power_integral(unsigned m, unsigned n) {
  if (m % 2 == 1) return 0.0L;
  return std::exp(log_gamma_half(1 + m) + log_gamma_half(n + 1) - log_gamma_half(2 + m + n));
}

long double phi_power_integral(unsigned m, unsigned n) {
  if (m % 2 == 1 || n % 2 == 1) return 0.0L;
  return 2.0L * std::exp(log_gamma_half(1 + m) + log_gamma_half(n + 1) - log_gamma_half(2 + m + n));
}

double pauli_monomial_integral(const PauliCounts& counts, const Monomial& extra) {
  const unsigned total = counts.total();
  if (total > kClosedFormCountCap)
    throw SizeLimitExceeded("closed form: " + std::to_string(total) + " outcomes exceed the cap of " +
                            std::to_string(kClosedFormCountCap));
  const auto& m = counts.m;

  // (1 +- cos t)^{m1,m2} -> cos^p t; (1 +- sin t cos f)^{m3,m4} -> (sin t cos f)^q;
  // (1 +- sin t sin f)^{m5,m6} -> (sin t sin f)^r.
  const auto c12 = signed_binomial_coefficients(m[0], m[1]);
  const auto c34 = signed_binomial_coefficients(m[2], m[3]);
  const auto c56 = signed_binomial_coefficients(m[4], m[5]);

  CompensatedSum sum;
  for (unsigned p = 0; p < c12.size(); ++p) {
    if (c12[p] == 0.0L || (p + extra.cos_theta) % 2 == 1) continue;
    for (unsigned q = 0; q < c34.size(); ++q) {
      if (c34[q] == 0.0L || (q + extra.cos_phi) % 2 == 1) continue;
      for (unsigned r = 0; r < c56.size(); ++r) {
        if (c56[r] == 0.0L || (r + extra.sin_phi) % 2 == 1) continue;
        // The extra +1 on the sine power is the Haar Jacobian sin(theta).
        const long double t = theta_power_integral(p + extra.cos_theta, q + r + extra.sin_theta + 1);
        const long double f = phi_power_integral(q + extra.cos_phi, r + extra.sin_phi);
        sum.add(c12[p] * c34[q] * c56[r] * t * f);
      }
    }
  }
  const long double scale = std::ldexp(1.0L, -static_cast<int>(total)) / (4.0L * std::numbers::pi_v<long double>);
  return static_cast<double>(sum.value() * scale);
}

double closedform_norm(const PauliCounts& counts) { return pauli_monomial_integral(counts); }

PosteriorMoment closedform_moment(const PauliCounts& counts) {
  const double n0 = pauli_monomial_integral(counts);
  const double z = pauli_monomial_integral(counts, {.cos_theta = 1});
  const double x = pauli_monomial_integral(counts, {.sin_theta = 1, .cos_phi = 1});
  const double y = pauli_monomial_integral(counts, {.sin_theta = 1, .sin_phi = 1});
  // |psi><psi| = [[(1+cos t)/2, sin t e^{-i f}/2], [sin t e^{i f}/2, (1-cos t)/2]]
  ComplexMatrix mat(2, 2);
  mat(0, 0) = 0.5 * (n0 + z);
  mat(1, 1) = 0.5 * (n0 - z);
  mat(0, 1) = Complex(0.5 * x, -0.5 * y);
  mat(1, 0) = Complex(0.5 * x, 0.5 * y);
  auto h = HermitianMatrix::hermitize(mat);
  return {std::move(h), n0, counts.total()};
}

}  // namespace fidest
