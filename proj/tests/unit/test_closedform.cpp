#include <doctest.h>

#include <cmath>

#include "fidest/closedform/bloch_moments.hpp"
#include "fidest/closedform/pauli.hpp"
#include "fidest/closedform/quadrature.hpp"
#include "fidest/quantum/bloch.hpp"
#include "fidest/quantum/eigen.hpp"
#include "fidest/quantum/errors.hpp"
#include "fidest/quantum/haar.hpp"
#include "oracle/oracle.hpp"

using namespace fidest;

namespace {

PauliCounts counts(std::array<unsigned, 6> m) { return PauliCounts{m}; }

double diff(const HermitianMatrix& a, const HermitianMatrix& b) { return (a.matrix() - b.matrix()).frobenius_norm(); }

MeasurementRecord random_record(std::size_t k, std::uint64_t seed) {
  RandomSource rng(seed);
  MeasurementRecord r(2);
  for (std::size_t i = 0; i < k; ++i) r.append(haar_random_state(2, rng));
  return r;
}

double mat3_diff(const Mat3& a, const Mat3& b) {
  double s = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) s = std::max(s, std::abs(a[i][j] - b[i][j]));
  return s;
}

}  // namespace

TEST_SUITE("closedform") {

TEST_CASE("trigonometric power integrals and parity selection") {
  for (unsigned m = 0; m <= 6; ++m)
    for (unsigned n = 0; n <= 6; ++n) {
      CHECK(std::abs(static_cast<double>(theta_power_integral(m, n)) - oracle::theta_integral_numeric(m, n)) < 1e-12);
      CHECK(std::abs(static_cast<double>(phi_power_integral(m, n)) - oracle::phi_integral_numeric(m, n)) < 1e-12);
      if (m % 2) CHECK(theta_power_integral(m, n) == 0.0L);
      if (m % 2 || n % 2) CHECK(phi_power_integral(m, n) == 0.0L);
    }
}

TEST_CASE("monomial integrals match the literal six-fold binomial sum") {
  const std::array<std::array<unsigned, 6>, 5> cases{{{0, 0, 0, 0, 0, 0},
                                                      {2, 1, 0, 3, 1, 0},
                                                      {1, 1, 1, 1, 1, 1},
                                                      {0, 4, 2, 0, 0, 3},
                                                      {3, 0, 2, 2, 1, 2}}};
  const std::array<Monomial, 4> extras{{{0, 0, 0, 0}, {1, 0, 0, 0}, {0, 1, 1, 0}, {0, 1, 0, 1}}};
  for (const auto& m : cases)
    for (const auto& e : extras) {
      const double lib = pauli_monomial_integral(counts(m), e);
      const double ref = oracle::sixfold_pauli_integral(m, e.cos_theta, e.sin_theta, e.cos_phi, e.sin_phi);
      CHECK(std::abs(lib - ref) <= 1e-13 + 1e-11 * std::abs(ref));
    }
}

TEST_CASE("closed-form norms") {
  CHECK(closedform_norm(counts({0, 0, 0, 0, 0, 0})) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(closedform_norm(counts({1, 0, 0, 0, 0, 0})) == doctest::Approx(0.5).epsilon(1e-15));
  const auto rec = MeasurementRecord(2, {pauli_states()[0], pauli_states()[2]});
  CHECK(closedform_norm(counts({1, 0, 1, 0, 0, 0})) == doctest::Approx(unnormalized_moment(rec).norm).epsilon(1e-12));
  CHECK_THROWS_AS(closedform_norm(counts({61, 0, 0, 0, 0, 0})), SizeLimitExceeded);
}

TEST_CASE("closed form equals the permanent path for every count vector with m <= 8") {
  std::size_t checked = 0;
  double worst = 0.0;
  std::array<unsigned, 6> m{};
  for (m[0] = 0; m[0] <= 8; ++m[0])
    for (m[1] = 0; m[0] + m[1] <= 8; ++m[1])
      for (m[2] = 0; m[0] + m[1] + m[2] <= 8; ++m[2])
        for (m[3] = 0; m[0] + m[1] + m[2] + m[3] <= 8; ++m[3])
          for (m[4] = 0; m[0] + m[1] + m[2] + m[3] + m[4] <= 8; ++m[4])
            for (m[5] = 0; m[0] + m[1] + m[2] + m[3] + m[4] + m[5] <= 8; ++m[5]) {
              const auto c = counts(m);
              const double d =
                  diff(closedform_moment(c).normalized(), unnormalized_moment(c.to_record()).normalized());
              worst = std::max(worst, d);
              ++checked;
            }
  CHECK(checked == 3003);
  CHECK(worst < 1e-11);
}

TEST_CASE("closed-form moment examples") {
  const auto rho1 = closedform_moment(counts({1, 0, 0, 0, 0, 0})).normalized();
  CHECK(rho1(0, 0).real() == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
  CHECK(rho1(1, 1).real() == doctest::Approx(1.0 / 3.0).epsilon(1e-14));

  for (unsigned k = 1; k <= 10; ++k) {
    const auto c = counts({k, 0, 0, 0, 0, 0});
    const double top = top_eigenpair(closedform_moment(c).normalized()).value;
    CHECK(top == doctest::Approx((k + 1.0) / (k + 2.0)).epsilon(1e-12));
    CHECK(top == doctest::Approx(top_eigenpair(unnormalized_moment(c.to_record()).normalized()).value).epsilon(1e-12));
  }

  const auto balanced = closedform_moment(counts({0, 0, 5, 5, 0, 0})).normalized();
  CHECK(std::abs(balanced(0, 1).real()) < 1e-12);
}

TEST_CASE("Pauli count classification") {
  const auto& ps = pauli_states();
  for (std::size_t i = 0; i < 6; ++i) CHECK(PauliCounts::classify(ps[i].with_global_phase(0.4)) == i);
  CHECK_FALSE(PauliCounts::classify(bloch_to_state(0.3, 0.2)).has_value());
  const MeasurementRecord rec(2, {ps[0], ps[3], ps[3], ps[5]});
  const auto c = PauliCounts::from_record(rec);
  REQUIRE(c.has_value());
  CHECK(*c == counts({1, 0, 0, 2, 0, 1}));
  CHECK_FALSE(PauliCounts::from_record(MeasurementRecord(2, {bloch_to_state(0.3, 0.2)})).has_value());
  CHECK_FALSE(PauliCounts::from_record(MeasurementRecord(3)).has_value());
}

TEST_CASE("quadrature moments") {
  CHECK(diff(quadrature_moment(MeasurementRecord(2)).normalized(),
             HermitianMatrix(ComplexMatrix::identity(2)).scaled(0.5)) < 1e-12);
  const auto rho1 = quadrature_moment(MeasurementRecord(2, {pauli_states()[0]})).normalized();
  CHECK(std::abs(rho1(0, 0).real() - 2.0 / 3.0) < 1e-8);
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto rec = random_record(3, seed);
    CHECK(diff(quadrature_moment(rec).normalized(), unnormalized_moment(rec).normalized()) < 1e-8);
  }
  CHECK_THROWS_AS(quadrature_moment(MeasurementRecord(3)), DimensionMismatch);
}

TEST_CASE("quadrature is converged at the default grid for k <= 20") {
  for (std::size_t k : {5u, 12u, 20u}) {
    const auto rec = random_record(k, 60 + k);
    const auto base = quadrature_moment(rec).normalized();
    const auto fine = quadrature_moment(rec, {256, 512}).normalized();
    CHECK(diff(base, fine) < 1e-9);
  }
}

TEST_CASE("Bloch moments agree across routes") {
  const auto c = counts({2, 1, 1, 0, 3, 1});
  const auto cf = closedform_bloch_moments(c);
  const auto pm = permanent_bloch_moments(c.to_record());
  const auto qd = quadrature_bloch_moments(c.to_record());
  CHECK(cf.mass == doctest::Approx(pm.mass).epsilon(1e-12));
  CHECK(cf.mass == doctest::Approx(qd.mass).epsilon(1e-12));
  CHECK(mat3_diff(cf.second, pm.second) < 1e-12 * cf.mass);
  CHECK(mat3_diff(cf.second, qd.second) < 1e-12 * cf.mass);
  for (int i = 0; i < 3; ++i) {
    CHECK(std::abs(cf.first[i] - pm.first[i]) < 1e-12 * cf.mass);
    CHECK(std::abs(cf.first[i] - qd.first[i]) < 1e-12 * cf.mass);
  }
  // The Bloch second moment has unit trace weight: tr(second) = mass.
  CHECK(cf.second[0][0] + cf.second[1][1] + cf.second[2][2] == doctest::Approx(cf.mass));

  const auto rec = random_record(6, 9);
  const auto bm = permanent_bloch_moments(rec);
  CHECK(diff(bm.to_posterior_moment(6).normalized(), unnormalized_moment(rec).normalized()) < 1e-12);
  const Vec3 u{0.0, 0.6, 0.8};
  const auto appended = unnormalized_moment(rec.with_appended(state_from_bloch_vector(u)));
  CHECK((bm.appended_moment(u, 7).matrix.matrix() - appended.matrix.matrix()).frobenius_norm() < 1e-12 * bm.mass);
}

}  // TEST_SUITE
