#include <doctest.h>

#include <cmath>
#include <numbers>

#include "fidest/quantum/bloch.hpp"
#include "fidest/quantum/eigen.hpp"
#include "fidest/quantum/errors.hpp"
#include "fidest/quantum/haar.hpp"
#include "fidest/quantum/permanent.hpp"
#include "fidest/quantum/random.hpp"
#include "fidest/quantum/state.hpp"
#include "oracle/oracle.hpp"

using namespace fidest;

namespace {

double rel_err(Complex a, Complex b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

ComplexMatrix random_hermitian(std::size_t n, std::uint64_t seed) {
  const auto m = oracle::random_matrix(n, seed);
  return HermitianMatrix::hermitize(m).matrix();
}

}  // namespace

TEST_SUITE("quantum") {

TEST_CASE("complex matrix arithmetic and hermiticity checks") {
  ComplexMatrix a(2, 2);
  a(0, 0) = 1.0;
  a(0, 1) = {0.0, 2.0};
  a(1, 0) = {0.0, -2.0};
  a(1, 1) = 3.0;
  CHECK(hermiticity_defect(a) == 0.0);
  const HermitianMatrix h(a);
  CHECK(h.trace() == doctest::Approx(4.0));
  CHECK((a * ComplexMatrix::identity(2)) == a);
  CHECK(a.adjoint() == a);

  ComplexMatrix bad = a;
  bad(0, 1) = 5.0;
  CHECK_THROWS_AS(HermitianMatrix{bad}, ValidationError);
  CHECK_THROWS_AS(HermitianMatrix{ComplexMatrix(2, 3)}, ValidationError);
  ComplexMatrix nan = a;
  nan(0, 0) = std::nan("");
  CHECK_THROWS_AS(HermitianMatrix{nan}, ValidationError);
}

TEST_CASE("pure state validation and phase convention") {
  CHECK_THROWS_AS(PureState({1.0, 1.0}), ValidationError);
  CHECK_THROWS_AS(PureState({std::nan(""), 0.0}), ValidationError);
  CHECK_THROWS_AS(PureState::normalized({0.0, 0.0}), ValidationError);
  const auto s = PureState::normalized({Complex(0.0, 1.0), Complex(1.0, 1.0)});
  const auto c = s.with_canonical_phase();
  CHECK(c[0].imag() == doctest::Approx(0.0));
  CHECK(c[0].real() > 0.0);
  CHECK(fidelity(s, c) == doctest::Approx(1.0));
  CHECK(fidelity(s, s.with_global_phase(1.3)) == doctest::Approx(1.0));
}

TEST_CASE("measurement basis rejects non-orthogonal vectors") {
  const auto& ps = pauli_states();
  CHECK_NOTHROW(MeasurementBasis({ps[0], ps[1]}));
  CHECK_THROWS_AS(MeasurementBasis({ps[0], ps[2]}), ValidationError);
  CHECK_THROWS_AS(MeasurementBasis({ps[0]}), ValidationError);
}

TEST_CASE("bloch angle conversions") {
  const auto& ps = pauli_states();
  CHECK(fidelity(bloch_to_state(0.0, 0.0), ps[0]) == doctest::Approx(1.0).epsilon(1e-15));
  const auto plus = bloch_to_state(std::numbers::pi / 2, 0.0);
  CHECK(std::abs(plus[0] - Complex(1 / std::sqrt(2.0), 0.0)) < 1e-15);
  CHECK(std::abs(plus[1] - Complex(1 / std::sqrt(2.0), 0.0)) < 1e-15);
  const auto plus_i = bloch_to_state(std::numbers::pi / 2, std::numbers::pi / 2);
  CHECK(std::abs(plus_i[1] - Complex(0.0, 1 / std::sqrt(2.0))) < 1e-15);
  CHECK_THROWS_AS(bloch_to_state(-0.1, 0.0), ValidationError);
  CHECK_THROWS_AS(bloch_to_state(1.0, 2 * std::numbers::pi), ValidationError);

  const auto a = state_to_bloch(bloch_to_state(1.1, 4.0));
  CHECK(a.theta == doctest::Approx(1.1));
  CHECK(a.phi == doctest::Approx(4.0));
  const auto v = bloch_vector(plus_i);
  CHECK(v[1] == doctest::Approx(1.0));
  const auto b = qubit_basis(0.7, 2.0);
  CHECK(std::abs(inner(b[0], b[1])) < 1e-15);
}

TEST_CASE("random source determinism and splitting") {
  RandomSource a(42), b(42), c(43);
  for (int i = 0; i < 100; ++i) CHECK(a() == b());
  RandomSource a2(42);
  CHECK(a2() != c());
  const RandomSource root(5);
  auto s1 = root.split(1), s1b = root.split(1), s2 = root.split(2);
  CHECK(s1() == s1b());
  CHECK(s1() != s2());
  RandomSource u(9);
  for (int i = 0; i < 1000; ++i) {
    const double x = u.uniform();
    CHECK((x >= 0.0 && x < 1.0));
  }
}

TEST_CASE("permanent of small known matrices") {
  CHECK(permanent(ComplexMatrix::identity(2)) == Complex(1.0));
  CHECK(permanent(ComplexMatrix(2, 2, 1.0)) == Complex(2.0));
  CHECK(std::abs(permanent(ComplexMatrix(3, 3, 1.0)) - 6.0) < 1e-14);
  CHECK_THROWS_AS(permanent(ComplexMatrix(2, 3)), DimensionMismatch);
  CHECK_THROWS_AS(permanent(ComplexMatrix()), DimensionMismatch);
  CHECK_THROWS_AS(permanent(ComplexMatrix(31, 31)), SizeLimitExceeded);
}

TEST_CASE("permanent matches the permutation sum for n <= 6") {
  for (std::size_t n = 1; n <= 6; ++n)
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      const auto m = oracle::random_matrix(n, seed * 31 + n);
      CHECK(rel_err(permanent(m), oracle::naive_permanent(m)) < 1e-11);
    }
  const auto m4 = oracle::random_matrix(4, 77);
  CHECK(rel_err(permanent(m4), oracle::naive_permanent(m4)) < 1e-12);
}

TEST_CASE("permanent is linear in each row") {
  auto m = oracle::random_matrix(4, 11);
  const Complex before = permanent(m);
  const Complex c(0.3, -1.7);
  for (std::size_t j = 0; j < 4; ++j) m(2, j) *= c;
  CHECK(rel_err(permanent(m), c * before) < 1e-12);
}

TEST_CASE("top eigenpair of reference matrices") {
  ComplexMatrix d(2, 2);
  d(0, 0) = 2.0 / 3.0;
  d(1, 1) = 1.0 / 3.0;
  auto top = top_eigenpair(HermitianMatrix(d));
  CHECK(top.value == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
  CHECK(fidelity(top.vector, pauli_states()[0]) == doctest::Approx(1.0));

  ComplexMatrix x(2, 2);
  x(0, 1) = 1.0;
  x(1, 0) = 1.0;
  top = top_eigenpair(HermitianMatrix(x));
  CHECK(top.value == doctest::Approx(1.0));
  CHECK(fidelity(top.vector, pauli_states()[2]) == doctest::Approx(1.0));

  const auto mixed = HermitianMatrix(ComplexMatrix::identity(4)).scaled(0.25);
  top = top_eigenpair(mixed);
  CHECK(top.value == doctest::Approx(0.25));
  CHECK(top.vector.dim() == 4);

  ComplexMatrix bad(2, 2);
  bad(0, 1) = 1.0;
  CHECK_THROWS_AS(top_eigenpair(bad), ValidationError);
}

TEST_CASE("Jacobi eigensystem reconstructs the input") {
  for (std::size_t n : {2u, 3u, 4u, 8u, 16u}) {
    const auto a = random_hermitian(n, 100 + n);
    const auto es = hermitian_eigensystem(HermitianMatrix(a));
    ComplexMatrix rec(n, n);
    double sum = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      rec += projector(es.vectors[k]) * Complex(es.values[k]);
      sum += es.values[k];
      if (k > 0) CHECK(es.values[k - 1] >= es.values[k]);
    }
    CHECK((rec - a).frobenius_norm() < 1e-10);
    CHECK(sum == doctest::Approx(a.trace().real()).epsilon(1e-10));
    const auto top = top_eigenpair(HermitianMatrix(a));
    std::vector<Complex> av(n);
    double resid = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      Complex s = 0.0;
      for (std::size_t j = 0; j < n; ++j) s += a(i, j) * top.vector[j];
      resid += std::norm(s - top.value * top.vector[i]);
    }
    CHECK(std::sqrt(resid) <= 1e-10 * a.frobenius_norm());
  }
  CHECK_THROWS_AS(hermitian_eigensystem(HermitianMatrix(ComplexMatrix::identity(17))), ValidationError);
}

TEST_CASE("haar random states") {
  RandomSource r1(3), r2(3);
  const auto a = haar_random_state(2, r1);
  const auto b = haar_random_state(2, r2);
  for (std::size_t i = 0; i < 2; ++i) CHECK(a[i] == b[i]);

  RandomSource r4(8);
  const auto s4 = haar_random_state(4, r4);
  double n2 = 0.0;
  for (std::size_t i = 0; i < 4; ++i) n2 += std::norm(s4[i]);
  CHECK(std::abs(n2 - 1.0) < 1e-12);
  CHECK_THROWS_AS(haar_random_state(1, r4), ValidationError);

  // Isotropy: the mean Bloch vector of 1e5 draws is near zero.
  RandomSource r(17);
  Vec3 mean{};
  const int n = 100000;
  for (int i = 0; i < n; ++i) {
    const auto v = bloch_vector(haar_random_state(2, r));
    for (int c = 0; c < 3; ++c) mean[c] += v[c] / n;
  }
  CHECK(std::sqrt(mean[0] * mean[0] + mean[1] * mean[1] + mean[2] * mean[2]) < 0.02);
}

TEST_CASE("haar states are invariant under a fixed unitary") {
  RandomSource r(23), ru(24);
  const auto u = haar_random_unitary(2, ru);
  const auto chi = pauli_states()[0];
  std::vector<double> plain, rotated;
  for (int i = 0; i < 100000; ++i) {
    plain.push_back(fidelity(chi, haar_random_state(2, r)));
    rotated.push_back(fidelity(chi, apply(u, haar_random_state(2, r))));
  }
  CHECK(oracle::ks_two_sample(plain, rotated) < 0.02);
}

TEST_CASE("haar random bases") {
  RandomSource r(5);
  for (std::size_t d : {2u, 3u, 4u}) {
    const auto b = haar_random_basis(d, r);
    CHECK(b.dim() == d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        CHECK(std::abs(inner(b[i], b[j]) - (i == j ? 1.0 : 0.0)) < 1e-12);
  }
  int distinct = 0;
  for (std::uint64_t s = 0; s < 100; ++s) {
    RandomSource a(1000 + 2 * s), c(1001 + 2 * s);
    const auto ba = haar_random_basis(2, a);
    const auto bc = haar_random_basis(2, c);
    if (fidelity(ba[0], bc[0]) < 0.999 || fidelity(ba[1], bc[1]) < 0.999) ++distinct;
  }
  CHECK(distinct == 100);

  std::vector<double> marginal;
  RandomSource rm(99);
  for (int i = 0; i < 100000; ++i) marginal.push_back(fidelity(pauli_states()[0], haar_random_basis(2, rm)[0]));
  CHECK(oracle::ks_uniform(marginal) < 0.01);
}

}  // TEST_SUITE
