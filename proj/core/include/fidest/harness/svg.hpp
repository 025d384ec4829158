#pragma once

#include <filesystem>
#include <string>

#include "fidest/harness/experiment.hpp"

namespace fidest::harness {

struct SvgOptions {
  bool log_scale = true;  // logarithmic infidelity axis
  int width = 720;
  int height = 480;
};

// Mean infidelity against k: one <polyline class="series"> per strategy with
// error bars, a <polyline class="bound"> when stats carry a bound, axis labels
// and a legend. Same input gives the same bytes. Throws ValidationError for
// empty stats.
std::string render_svg(const RunStatistics& stats, const SvgOptions& options = {});
void write_svg_plot(const RunStatistics& stats, const std::filesystem::path& path, const SvgOptions& options = {});

}  // namespace fidest::harness
