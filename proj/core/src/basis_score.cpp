#include "fidest/optimizer/basis_score.hpp"

#include <algorithm>
#include <cmath>

#include "fidest/quantum/bloch.hpp"
#include "fidest/quantum/eigen.hpp"
#include "fidest/quantum/errors.hpp"

namespace fidest {

namespace {
constexpr double kCatalogTieTolerance = 1e-12;
}

double basis_score(const MeasurementRecord& record, const MeasurementBasis& basis, const MomentPolicy& policy) {
  if (record.dim() != basis.dim()) throw DimensionMismatch("basis_score: record and basis dimensions differ");
  const double base_norm = evaluate_moment(record, policy).norm;
  double total = 0.0;
  for (const auto& e : basis.vectors()) {
    const auto moment = evaluate_moment(record.with_appended(e), policy);
    total += top_eigenpair(moment.matrix).value;
  }
  return total / base_norm;
}

OptimizationReport optimize_from_catalog(const MeasurementRecord& record, const BasisCatalog& catalog,
                                         const MomentPolicy& policy) {
  if (catalog.dim() != record.dim())
    throw DimensionMismatch("optimize_from_catalog: catalog dimension does not match the record");

  std::vector<double> scores;
  scores.reserve(catalog.size());
  if (record.dim() == 2) {
    const auto bm = evaluate_bloch_moments(record, policy);
    for (const auto& b : catalog.entries()) scores.push_back(bm.basis_score(bloch_vector(b[0])));
  } else {
    for (const auto& b : catalog.entries()) scores.push_back(basis_score(record, b, policy));
  }

  double best = scores.front();
  for (double s : scores) best = std::max(best, s);
  const double cutoff = best - kCatalogTieTolerance * std::abs(best);
  std::size_t chosen = 0;
  std::size_t ties = 0;
  for (std::size_t i = 0; i < scores.size(); ++i) {
    if (scores[i] >= cutoff) {
      if (ties == 0) chosen = i;
      ++ties;
    }
  }

  OptimizationReport report{catalog[chosen], scores[chosen]};
  report.restarts_used = 0;
  report.degenerate = ties > 1;
  report.best_index = chosen;
  report.per_candidate_scores = std::move(scores);
  return report;
}

}  // namespace fidest
