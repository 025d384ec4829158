#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "fidest/harness/experiment.hpp"

namespace fidest::harness {

// Header "strategy,k,mean_infidelity,stderr,n,bound", one row per
// (strategy, k) sorted by label then k, reals printed with 12 significant
// digits. The bound field is empty when stats carry no bound.
std::string format_csv(const RunStatistics& stats);
void write_csv(const RunStatistics& stats, const std::filesystem::path& path);

// Inverse of format_csv (samples are not recoverable). Throws ValidationError
// on malformed input.
RunStatistics parse_csv(std::string_view text);
RunStatistics read_csv(const std::filesystem::path& path);

}  // namespace fidest::harness
