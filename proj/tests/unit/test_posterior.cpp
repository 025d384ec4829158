#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "fidest/posterior/moment.hpp"
#include "fidest/posterior/record.hpp"
#include "fidest/quantum/bloch.hpp"
#include "fidest/quantum/eigen.hpp"
#include "fidest/quantum/errors.hpp"
#include "fidest/quantum/haar.hpp"
#include "oracle/oracle.hpp"

using namespace fidest;

namespace {

const PureState& up() { return pauli_states()[0]; }
const PureState& plus() { return pauli_states()[2]; }
const PureState& plus_i() { return pauli_states()[4]; }

MeasurementRecord random_record(std::size_t d, std::size_t k, std::uint64_t seed) {
  RandomSource rng(seed);
  MeasurementRecord r(d);
  for (std::size_t i = 0; i < k; ++i) r.append(haar_random_state(d, rng));
  return r;
}

double diff(const HermitianMatrix& a, const HermitianMatrix& b) { return (a.matrix() - b.matrix()).frobenius_norm(); }

}  // namespace

TEST_SUITE("posterior") {

TEST_CASE("record keeps an incremental Gram matrix") {
  MeasurementRecord r(2);
  CHECK(r.empty());
  r.append(up());
  r.append(plus());
  r.append(plus_i());
  const auto& g = r.gram();
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      CHECK(std::abs(g(i, j) - inner(r.outcomes()[i], r.outcomes()[j])) < 1e-15);
      CHECK(std::abs(g(i, j) - std::conj(g(j, i))) < 1e-12);
    }
  CHECK(std::abs(g(1, 1) - 1.0) < 1e-12);
  CHECK_THROWS_AS(r.append(PureState::basis_vector(3, 0)), DimensionMismatch);
  CHECK_THROWS_AS(MeasurementRecord(1), ValidationError);
}

TEST_CASE("empty record gives the maximally mixed state") {
  for (std::size_t d : {2u, 3u, 4u}) {
    const auto rho = normalized_state(MeasurementRecord(d));
    CHECK(diff(rho, HermitianMatrix(ComplexMatrix::identity(d)).scaled(1.0 / d)) < 1e-14);
  }
  const auto m = unnormalized_moment(MeasurementRecord(2));
  CHECK(m.norm == doctest::Approx(1.0));
  RandomSource rng(1);
  CHECK(outcome_probability(MeasurementRecord(2), haar_random_state(2, rng)) == doctest::Approx(0.5));
  CHECK(purity(MeasurementRecord(2)) == doctest::Approx(0.5));
}

TEST_CASE("scripted qubit records reproduce the reference fidelities") {
  MeasurementRecord r(2, {up()});
  const auto rho1 = normalized_state(r);
  CHECK(rho1(0, 0).real() == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
  CHECK(rho1(1, 1).real() == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  CHECK(std::abs(rho1(0, 1)) < 1e-15);
  auto ml = most_likely_state(r);
  CHECK(ml.fidelity == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
  CHECK(fidelity(ml.state, up()) == doctest::Approx(1.0));
  CHECK(outcome_probability(r, up()) == doctest::Approx(2.0 / 3.0));
  CHECK(purity(r) == doctest::Approx(5.0 / 9.0));

  r.append(plus());
  ml = most_likely_state(r);
  CHECK(std::abs(ml.fidelity - (0.5 + std::sqrt(2.0) / 6.0)) < 1e-12);
  auto a = state_to_bloch(ml.state);
  CHECK(a.theta == doctest::Approx(std::numbers::pi / 4));
  CHECK(std::min(a.phi, 2 * std::numbers::pi - a.phi) == doctest::Approx(0.0));
  CHECK(fidelity(ml.state, PureState::normalized({up()[0] + plus()[0], up()[1] + plus()[1]})) ==
        doctest::Approx(1.0));

  r.append(plus_i());
  ml = most_likely_state(r);
  CHECK(std::abs(ml.fidelity - (0.5 + std::sqrt(3.0) / 6.0)) < 1e-12);
  a = state_to_bloch(ml.state);
  CHECK(a.theta == doctest::Approx(std::acos(1.0 / std::sqrt(3.0))));
  CHECK(a.phi == doctest::Approx(std::numbers::pi / 4));
}

TEST_CASE("moments are Hermitian, positive and trace-normalized") {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    const auto rec = random_record(seed % 2 ? 2 : 3, 1 + seed, seed);
    const auto m = unnormalized_moment(rec);
    CHECK(m.norm > 0.0);
    CHECK(m.matrix.trace() == doctest::Approx(m.norm).epsilon(1e-9));
    for (double v : hermitian_eigensystem(m.matrix).values) CHECK(v >= -1e-10);
    CHECK(normalized_state(rec).trace() == doctest::Approx(1.0).epsilon(1e-10));
  }
}

TEST_CASE("exchangeability of the record order") {
  auto rec = random_record(3, 5, 41);
  auto outcomes = rec.outcomes();
  const auto rho = normalized_state(rec);
  std::reverse(outcomes.begin(), outcomes.end());
  std::rotate(outcomes.begin(), outcomes.begin() + 2, outcomes.end());
  CHECK(diff(normalized_state(MeasurementRecord(3, outcomes)), rho) < 1e-12);
}

TEST_CASE("Bayes marginalization over the next outcome") {
  RandomSource rng(12);
  for (std::size_t d : {2u, 3u, 4u}) {
    const auto rec = random_record(d, 3, 50 + d);
    const auto prev = unnormalized_moment(rec);
    const auto basis = haar_random_basis(d, rng);
    ComplexMatrix sum(d, d);
    double probs = 0.0;
    for (std::size_t n = 0; n < d; ++n) {
      sum += unnormalized_moment(rec.with_appended(basis[n])).matrix.matrix();
      probs += outcome_probability(rec, basis[n]);
    }
    CHECK((sum - prev.matrix.matrix()).frobenius_norm() < 1e-10);
    CHECK(probs == doctest::Approx(1.0).epsilon(1e-10));
  }
}

TEST_CASE("unitary covariance") {
  RandomSource rng(77);
  const auto rec = random_record(3, 4, 78);
  const auto u = haar_random_unitary(3, rng);
  std::vector<PureState> moved;
  for (const auto& s : rec.outcomes()) moved.push_back(apply(u, s));
  const auto rho = normalized_state(rec).matrix();
  const auto expected = u * rho * u.adjoint();
  CHECK((normalized_state(MeasurementRecord(3, moved)).matrix() - expected).frobenius_norm() < 1e-10);
}

TEST_CASE("permanent path agrees with a Monte Carlo Haar oracle") {
  // Product-state record in d = 4.
  RandomSource rng(5);
  MeasurementRecord rec4(4);
  for (int i = 0; i < 3; ++i) rec4.append(tensor(haar_random_state(2, rng), haar_random_state(2, rng)));
  const auto mc4 = oracle::monte_carlo_state(rec4, 1000000, 901);
  CHECK(oracle::frobenius_distance(mc4, normalized_state(rec4).matrix()) / oracle::frobenius_norm(mc4) < 2e-2);

  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    const auto rec = random_record(2, 2 * seed, 300 + seed);
    const auto mc = oracle::monte_carlo_state(rec, 1000000, 400 + seed);
    CHECK(oracle::frobenius_distance(mc, normalized_state(rec).matrix()) < 2e-2);
  }
}

TEST_CASE("purity grows along a repeated outcome") {
  MeasurementRecord r(2);
  double last = purity(r);
  for (int k = 0; k < 16; ++k) {
    r.append(up());
    const double p = purity(r);
    CHECK(p > last);
    CHECK(p <= 1.0);
    last = p;
  }
  CHECK(last > 0.85);
}

TEST_CASE("record length beyond the permanent cap is refused") {
  MeasurementRecord r(2);
  for (int i = 0; i < 30; ++i) r.append(up());
  CHECK_THROWS_AS(unnormalized_moment(r), SizeLimitExceeded);
}

TEST_CASE("planar prior") {
  CHECK_THROWS_AS(PriorSpec::planar_qubit().validate(3), ValidationError);
  const auto planar = PriorSpec::planar_qubit();
  std::vector<double> grid;
  for (int i = 0; i < 16; ++i) grid.push_back(2 * std::numbers::pi * i / 16);

  const auto flat = planar_posterior_density(MeasurementRecord(2), planar, grid);
  for (double v : flat) CHECK(v == doctest::Approx(flat.front()));

  const auto dens = planar_posterior_density(MeasurementRecord(2, {plus()}), planar, grid);
  for (std::size_t i = 0; i < grid.size(); ++i) CHECK(dens[i] == doctest::Approx((1 + std::cos(grid[i])) / 2));
  CHECK(std::max_element(dens.begin(), dens.end()) - dens.begin() == 0);

  CHECK_THROWS_AS(planar_posterior_density(MeasurementRecord(2), PriorSpec::uniform(), grid), ValidationError);
  CHECK_THROWS_AS(planar_posterior_density(MeasurementRecord(3), planar, grid), ValidationError);

  // In-plane moment after |+>: Bloch vector along +x, no z component.
  const auto rho = normalized_state(MeasurementRecord(2, {plus()}), planar);
  CHECK(std::abs(rho(0, 0).real() - 0.5) < 1e-12);
  CHECK(rho(0, 1).real() == doctest::Approx(0.25).epsilon(1e-9));
}

}  // TEST_SUITE
