#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "fidest/harness/experiment.hpp"
#include "fidest/optimizer/catalog.hpp"

namespace fidest::harness {

// "pauli" or "local-pauli-2q".
BasisCatalog catalog_by_name(std::string_view name);

// Builds a strategy from its label. Catalog strategies without a catalog name
// get the default catalog for dim (pauli for d = 2, local-pauli-2q for d = 4).
Strategy make_strategy(std::string_view kind, const std::optional<std::string>& catalog, std::size_t dim);

// JSON document:
//   {"dim": 2,
//    "strategies": [{"kind": "adaptive"}, {"kind": "nonadaptive", "catalog": "pauli"}],
//    "n_experiments": 500, "k_max": 30, "seed": 1,
//    "optimizer": {"restarts": 8, "grad_step": 1e-5, "tol": 1e-7},
//    "output": {"csv": "out.csv", "svg": "out.svg"}}
// "optimizer" and its members and "output.svg" are optional. Unknown keys
// and malformed values throw ValidationError.
ExperimentConfig parse_config(std::string_view json_text);

// Throws IoError when the file cannot be read.
ExperimentConfig load_config(const std::filesystem::path& path);

}  // namespace fidest::harness
