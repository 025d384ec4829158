#include <cmath>
#include <cstdio>
#include <numbers>

#include "cli/cli.hpp"
#include "fidest/optimizer/catalog.hpp"
#include "fidest/quantum/bloch.hpp"
#include "fidest/simulator/protocol.hpp"

namespace fidest::cli {
namespace {

constexpr double kFidelityTol = 1e-9;
constexpr double kBasisTol = 1e-5;

std::size_t closest(const MeasurementBasis& basis, const PureState& target) {
  return fidelity(basis[0], target) >= fidelity(basis[1], target) ? 0 : 1;
}

// Rotation about z by -phi: maps the realized second outcome onto |+>.
PureState gauge(const PureState& s, double phi) {
  return PureState::normalized({s[0], s[1] * std::polar(1.0, -phi)});
}

MeasurementBasis gauge(const MeasurementBasis& b, double phi) {
  return MeasurementBasis({gauge(b[0], phi), gauge(b[1], phi)});
}

bool unbiased(const MeasurementBasis& b, const PureState& s) {
  return std::abs(fidelity(b[0], s) - 0.5) <= kBasisTol && std::abs(fidelity(b[1], s) - 0.5) <= kBasisTol;
}

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

}  // namespace

std::vector<Table1Row> validate_table1(double perturb) {
  const auto& ps = pauli_states();
  const auto catalog = pauli_catalog();
  const PureState& up = ps[0];
  const PureState& plus_i = ps[4];

  // The second outcome fixes the azimuthal gauge of everything after it.
  double phi2 = 0.0;
  ProtocolOptions opts;
  opts.first_basis = catalog[0];
  opts.outcome_script = [&](std::size_t k, const MeasurementBasis& b) -> std::size_t {
    switch (k) {
      case 1: return closest(b, up);
      case 2: phi2 = state_to_bloch(b[0]).phi; return 0;
      case 3: return closest(b, gauge(plus_i, -phi2));
      default: return 0;
    }
  };
  if (perturb != 0.0) {
    opts.basis_hook = [perturb](std::size_t k, const MeasurementBasis& planned) {
      if (k != 2) return planned;
      const auto a = state_to_bloch(planned[0]);
      return qubit_basis(std::clamp(a.theta - perturb, 0.0, std::numbers::pi), a.phi);
    };
  }
  const auto run = run_protocol(up, Strategy::adaptive(), StoppingRule::iteration_cap(4), RandomSource(0), opts);

  const double expected[4] = {0.5, 2.0 / 3.0, 0.5 + std::sqrt(2.0) / 6.0, 0.5 + std::sqrt(3.0) / 6.0};
  // Most likely states point along the sum of the recorded Bloch vectors.
  const PureState psi[4] = {up, up, state_from_bloch_vector({1.0, 0.0, 1.0}), state_from_bloch_vector({1.0, 1.0, 1.0})};

  std::vector<Table1Row> rows;
  for (std::size_t k = 0; k <= 3; ++k) {
    const Estimate& est = k == 0 ? run.initial : run.estimates[k - 1];
    const MeasurementBasis next = gauge(run.bases_used[k], phi2);
    Table1Row row{k, est.fidelity, expected[k], true, {}};
    auto check = [&](bool ok, const std::string& what) {
      if (!ok) {
        row.pass = false;
        row.detail += (row.detail.empty() ? "" : "; ") + what;
      }
    };
    check(std::abs(est.fidelity - expected[k]) <= kFidelityTol, "lambda_max mismatch");
    if (k >= 1) check(fidelity(gauge(est.state, phi2), psi[k]) >= 1.0 - kFidelityTol, "most likely state mismatch");
    switch (k) {
      case 0: check(basis_distance(next, catalog[0]) <= kBasisTol, "first basis is not {up, down}"); break;
      case 1: check(basis_distance(next, catalog[1]) <= kBasisTol, "second basis is not {+, -}"); break;
      case 2: check(basis_distance(next, catalog[2]) <= kBasisTol, "third basis is not {+i, -i}"); break;
      case 3: break;
    }
    if (k >= 1) {
      check(unbiased(next, gauge(est.state, phi2)), "next basis is biased to the most likely state");
      for (std::size_t j = 0; j < k && k < 3; ++j)
        check(basis_distance(next, gauge(run.bases_used[j], phi2)) >= 0.5 - kBasisTol, "next basis is biased to an earlier basis");
    }
    if (row.detail.empty()) {
      const auto a = state_to_bloch(next[0]);
      row.detail = "next basis theta=" + fmt("%.6f", a.theta) + " phi=" + fmt("%.6f", a.phi);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace fidest::cli
