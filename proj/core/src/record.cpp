#include "fidest/posterior/record.hpp"

#include "fidest/quantum/errors.hpp"

namespace fidest {

MeasurementRecord::MeasurementRecord(std::size_t dim) : dim_(dim) {
  if (dim < 2) throw ValidationError("MeasurementRecord: dimension must be at least 2");
}

MeasurementRecord::MeasurementRecord(std::size_t dim, std::vector<PureState> outcomes)
    : MeasurementRecord(dim) {
  for (auto& s : outcomes) append(std::move(s));
}

void MeasurementRecord::append(PureState outcome) {
  if (outcome.dim() != dim_) throw DimensionMismatch("MeasurementRecord: outcome dimension mismatch");
  const std::size_t k = outcomes_.size();
  ComplexMatrix grown(k + 1, k + 1);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) grown(i, j) = gram_(i, j);
  for (std::size_t i = 0; i < k; ++i) {
    const Complex g = inner(outcomes_[i], outcome);
    grown(i, k) = g;
    grown(k, i) = std::conj(g);
  }
  grown(k, k) = 1.0;
  gram_ = std::move(grown);
  outcomes_.push_back(std::move(outcome));
}

MeasurementRecord MeasurementRecord::with_appended(PureState outcome) const {
  MeasurementRecord copy = *this;
  copy.append(std::move(outcome));
  return copy;
}

}  // namespace fidest
