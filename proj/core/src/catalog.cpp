#include "fidest/optimizer/catalog.hpp"

#include <set>

#include "fidest/quantum/bloch.hpp"
#include "fidest/quantum/errors.hpp"

namespace fidest {

BasisCatalog::BasisCatalog(Kind kind, std::vector<MeasurementBasis> entries)
    : kind_(kind), entries_(std::move(entries)) {
  if (entries_.empty()) throw ValidationError("BasisCatalog: catalog must not be empty");
  std::set<std::string> labels;
  for (const auto& b : entries_) {
    if (b.dim() != entries_.front().dim()) throw DimensionMismatch("BasisCatalog: mixed dimensions");
    if (!labels.insert(b.label()).second)
      throw ValidationError("BasisCatalog: duplicate label '" + b.label() + "'");
  }
}

std::string_view to_string(BasisCatalog::Kind kind) {
  switch (kind) {
    case BasisCatalog::Kind::PauliQubit: return "pauli";
    case BasisCatalog::Kind::LocalPauliTwoQubit: return "local-pauli-2q";
    case BasisCatalog::Kind::Custom: return "custom";
  }
  return "unknown";
}

namespace {

struct NamedQubitBasis {
  char name;
  std::size_t first;
  std::size_t second;
};

// Indices into pauli_states().
constexpr NamedQubitBasis kZ{'Z', 0, 1};
constexpr NamedQubitBasis kX{'X', 2, 3};
constexpr NamedQubitBasis kY{'Y', 4, 5};

MeasurementBasis qubit_entry(const NamedQubitBasis& b) {
  const auto& ps = pauli_states();
  return MeasurementBasis({ps[b.first], ps[b.second]}, std::string(1, b.name));
}

}  // namespace

BasisCatalog pauli_catalog() {
  return BasisCatalog(BasisCatalog::Kind::PauliQubit, {qubit_entry(kZ), qubit_entry(kX), qubit_entry(kY)});
}

BasisCatalog local_pauli_catalog() {
  const auto& ps = pauli_states();
  const NamedQubitBasis order[] = {kX, kY, kZ};
  std::vector<MeasurementBasis> entries;
  for (const auto& a : order) {
    for (const auto& b : order) {
      std::vector<PureState> vecs;
      for (std::size_t i : {a.first, a.second})
        for (std::size_t j : {b.first, b.second}) vecs.push_back(tensor(ps[i], ps[j]));
      entries.emplace_back(std::move(vecs), std::string{a.name, b.name});
    }
  }
  return BasisCatalog(BasisCatalog::Kind::LocalPauliTwoQubit, std::move(entries));
}

}  // namespace fidest
