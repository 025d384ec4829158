#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fidest/optimizer/catalog.hpp"
#include "fidest/optimizer/moment_policy.hpp"
#include "fidest/posterior/record.hpp"
#include "fidest/quantum/state.hpp"

namespace fidest {

// Fidelity-optimal basis figure of merit for the next measurement:
//   sum_n lambda_max(moment of record + e_n) / (integral dP of record).
// Dividing by the record's normalization leaves the argmax unchanged and
// makes the score equal the expected fidelity of the next most-likely state.
double basis_score(const MeasurementRecord& record, const MeasurementBasis& basis,
                   const MomentPolicy& policy = {});

struct RestartOutcome {
  MeasurementBasis basis;
  double score;
  int iterations;
  bool converged;
};

struct OptimizationReport {
  MeasurementBasis best_basis;
  double score = 0.0;
  std::size_t restarts_used = 0;
  bool degenerate = false;
  bool converged = true;
  std::optional<std::size_t> best_index{};     // catalog mode
  std::vector<double> per_candidate_scores{};  // catalog mode
  std::vector<RestartOutcome> restart_optima{};  // continuous mode, in start order
};

// Scores every catalog entry and returns the maximizer; ties within a relative
// 1e-12 go to the lowest index. Qubit catalogs score through Bloch moments
// (closed form for Pauli records); larger dimensions use basis_score.
// Throws DimensionMismatch when the catalog and record dimensions differ.
OptimizationReport optimize_from_catalog(const MeasurementRecord& record, const BasisCatalog& catalog,
                                         const MomentPolicy& policy = {});

}  // namespace fidest
