#pragma once

#include <string_view>
#include <vector>

#include "fidest/quantum/state.hpp"

namespace fidest {

// Finite set of measurement bases a restricted strategy may choose from.
class BasisCatalog {
 public:
  enum class Kind { PauliQubit, LocalPauliTwoQubit, Custom };

  // Throws ValidationError for an empty catalog, mixed dimensions or
  // duplicate labels.
  BasisCatalog(Kind kind, std::vector<MeasurementBasis> entries);

  Kind kind() const noexcept { return kind_; }
  std::size_t dim() const noexcept { return entries_.front().dim(); }
  std::size_t size() const noexcept { return entries_.size(); }
  const std::vector<MeasurementBasis>& entries() const noexcept { return entries_; }
  const MeasurementBasis& operator[](std::size_t i) const { return entries_[i]; }

 private:
  Kind kind_;
  std::vector<MeasurementBasis> entries_;
};

std::string_view to_string(BasisCatalog::Kind kind);

// Z = {up, down}, X = {+, -}, Y = {+i, -i}, in that order.
BasisCatalog pauli_catalog();

// The nine local products {X, Y, Z} x {X, Y, Z}, first qubit major; vectors
// ordered first-qubit major as well. Labels "XX", "XY", ..., "ZZ".
BasisCatalog local_pauli_catalog();

}  // namespace fidest
