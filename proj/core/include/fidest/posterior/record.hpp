#pragma once

#include <cstddef>
#include <vector>

#include "fidest/quantum/complex_matrix.hpp"
#include "fidest/quantum/state.hpp"

namespace fidest {

// Ordered outcome states S_k = {|phi_1>, ..., |phi_k>} together with the Gram
// matrix gram(i, j) = <phi_i|phi_j>. append() extends the Gram matrix by one
// row and column; existing entries are never recomputed.
class MeasurementRecord {
 public:
  explicit MeasurementRecord(std::size_t dim);
  MeasurementRecord(std::size_t dim, std::vector<PureState> outcomes);

  void append(PureState outcome);
  MeasurementRecord with_appended(PureState outcome) const;

  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return outcomes_.size(); }
  bool empty() const noexcept { return outcomes_.empty(); }
  const std::vector<PureState>& outcomes() const noexcept { return outcomes_; }
  const ComplexMatrix& gram() const noexcept { return gram_; }

 private:
  std::size_t dim_;
  std::vector<PureState> outcomes_;
  ComplexMatrix gram_;
};

}  // namespace fidest
