#include "fidest/harness/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>

#include "fidest/quantum/errors.hpp"

namespace fidest::harness {
namespace {

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2"};
constexpr double kLeft = 70, kRight = 170, kTop = 30, kBottom = 55;

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Axes {
  double x0, x1, y0, y1;  // data ranges (y already in log10 when log)
  bool log;
  double w, h;

  double px(double k) const { return kLeft + (k - x0) / (x1 - x0) * (w - kLeft - kRight); }
  double py(double v) const {
    const double t = log ? std::log10(std::max(v, std::pow(10.0, y0))) : v;
    return kTop + (y1 - t) / (y1 - y0) * (h - kTop - kBottom);
  }
};

}  // namespace

std::string render_svg(const RunStatistics& stats, const SvgOptions& options) {
  if (stats.series.empty()) throw ValidationError("render_svg: statistics are empty");
  const std::size_t nk = stats.series.front().mean.size();
  if (nk == 0) throw ValidationError("render_svg: statistics have no k values");
  for (const auto& s : stats.series)
    if (s.mean.size() != nk || s.stderr_mean.size() != nk)
      throw ValidationError("render_svg: series '" + s.label + "' has inconsistent length");

  double lo = std::numeric_limits<double>::infinity();
  double hi = 0.0;
  auto include = [&](double v) {
    if (!std::isfinite(v)) return;
    if (v > 0.0) lo = std::min(lo, v);
    hi = std::max(hi, v);
  };
  for (const auto& s : stats.series)
    for (std::size_t k = 0; k < nk; ++k) {
      include(s.mean[k] - s.stderr_mean[k]);
      include(s.mean[k] + s.stderr_mean[k]);
      include(s.mean[k]);
    }
  if (stats.bound)
    for (double b : *stats.bound) include(b);
  if (!std::isfinite(lo)) lo = 1e-3;
  if (hi <= 0.0) hi = 1.0;

  Axes ax{0.0, std::max<double>(1.0, static_cast<double>(nk - 1)), 0.0, 0.0, options.log_scale,
          static_cast<double>(options.width), static_cast<double>(options.height)};
  if (ax.log) {
    ax.y0 = std::floor(std::log10(lo));
    ax.y1 = std::ceil(std::log10(hi));
    if (ax.y1 <= ax.y0) ax.y1 = ax.y0 + 1.0;
  } else {
    ax.y0 = 0.0;
    ax.y1 = hi * 1.05;
  }

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(options.width) + "\" height=\"" +
         std::to_string(options.height) + "\" viewBox=\"0 0 " + std::to_string(options.width) + " " +
         std::to_string(options.height) + "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  // Axes and ticks.
  const double left = kLeft, right = ax.w - kRight, top = kTop, bottom = ax.h - kBottom;
  out += "<g class=\"axes\" stroke=\"black\" fill=\"none\">\n";
  out += "<line x1=\"" + num(left) + "\" y1=\"" + num(bottom) + "\" x2=\"" + num(right) + "\" y2=\"" + num(bottom) + "\"/>\n";
  out += "<line x1=\"" + num(left) + "\" y1=\"" + num(top) + "\" x2=\"" + num(left) + "\" y2=\"" + num(bottom) + "\"/>\n";
  out += "</g>\n<g class=\"ticks\" text-anchor=\"middle\">\n";
  const std::size_t kmax = nk - 1;
  const std::size_t xstep = std::max<std::size_t>(1, (kmax + 9) / 10);
  for (std::size_t k = 0; k <= kmax; k += xstep) {
    const double x = ax.px(static_cast<double>(k));
    out += "<line x1=\"" + num(x) + "\" y1=\"" + num(bottom) + "\" x2=\"" + num(x) + "\" y2=\"" + num(bottom + 5) +
           "\" stroke=\"black\"/>\n";
    out += "<text x=\"" + num(x) + "\" y=\"" + num(bottom + 18) + "\">" + std::to_string(k) + "</text>\n";
  }
  if (ax.log) {
    for (int e = static_cast<int>(ax.y0); e <= static_cast<int>(ax.y1); ++e) {
      const double y = ax.py(std::pow(10.0, e));
      out += "<line x1=\"" + num(left - 5) + "\" y1=\"" + num(y) + "\" x2=\"" + num(left) + "\" y2=\"" + num(y) +
             "\" stroke=\"black\"/>\n";
      out += "<text x=\"" + num(left - 28) + "\" y=\"" + num(y + 4) + "\">1e" + std::to_string(e) + "</text>\n";
    }
  } else {
    for (int i = 0; i <= 5; ++i) {
      const double v = ax.y1 * i / 5.0;
      const double y = ax.py(v);
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.3g", v);
      out += "<line x1=\"" + num(left - 5) + "\" y1=\"" + num(y) + "\" x2=\"" + num(left) + "\" y2=\"" + num(y) +
             "\" stroke=\"black\"/>\n";
      out += "<text x=\"" + num(left - 28) + "\" y=\"" + num(y + 4) + "\">" + buf + "</text>\n";
    }
  }
  out += "</g>\n";
  out += "<text class=\"xlabel\" x=\"" + num((left + right) / 2) + "\" y=\"" + num(ax.h - 12) +
         "\" text-anchor=\"middle\">number of measurements k</text>\n";
  out += "<text class=\"ylabel\" transform=\"translate(16," + num((top + bottom) / 2) +
         ") rotate(-90)\" text-anchor=\"middle\">mean infidelity</text>\n";

  if (stats.bound) {
    out += "<polyline class=\"bound\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\" points=\"";
    for (std::size_t k = 0; k < stats.bound->size() && k < nk; ++k) {
      if (k) out += ' ';
      out += num(ax.px(static_cast<double>(k))) + ',' + num(ax.py((*stats.bound)[k]));
    }
    out += "\"/>\n";
  }

  for (std::size_t i = 0; i < stats.series.size(); ++i) {
    const auto& s = stats.series[i];
    const char* color = kPalette[i % std::size(kPalette)];
    out += "<g class=\"errorbars\" stroke=\"" + std::string(color) + "\">\n";
    for (std::size_t k = 0; k < nk; ++k) {
      const double x = ax.px(static_cast<double>(k));
      out += "<line x1=\"" + num(x) + "\" y1=\"" + num(ax.py(s.mean[k] - s.stderr_mean[k])) + "\" x2=\"" + num(x) +
             "\" y2=\"" + num(ax.py(s.mean[k] + s.stderr_mean[k])) + "\"/>\n";
    }
    out += "</g>\n";
    out += "<polyline class=\"series\" data-strategy=\"" + escape(s.label) + "\" fill=\"none\" stroke=\"" + color +
           "\" stroke-width=\"1.5\" stroke-dasharray=\"5,3\" points=\"";
    for (std::size_t k = 0; k < nk; ++k) {
      if (k) out += ' ';
      out += num(ax.px(static_cast<double>(k))) + ',' + num(ax.py(s.mean[k]));
    }
    out += "\"/>\n";
  }

  out += "<g class=\"legend\">\n";
  double ly = top + 10;
  const double lx = right + 15;
  for (std::size_t i = 0; i < stats.series.size(); ++i) {
    const char* color = kPalette[i % std::size(kPalette)];
    out += "<line x1=\"" + num(lx) + "\" y1=\"" + num(ly) + "\" x2=\"" + num(lx + 24) + "\" y2=\"" + num(ly) +
           "\" stroke=\"" + color + "\" stroke-width=\"1.5\" stroke-dasharray=\"5,3\"/>\n";
    out += "<text x=\"" + num(lx + 30) + "\" y=\"" + num(ly + 4) + "\">" + escape(stats.series[i].label) + "</text>\n";
    ly += 18;
  }
  if (stats.bound) {
    out += "<line x1=\"" + num(lx) + "\" y1=\"" + num(ly) + "\" x2=\"" + num(lx + 24) + "\" y2=\"" + num(ly) +
           "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
    out += "<text x=\"" + num(lx + 30) + "\" y=\"" + num(ly + 4) + "\">1/(k+2) bound</text>\n";
  }
  out += "</g>\n</svg>\n";
  return out;
}

void write_svg_plot(const RunStatistics& stats, const std::filesystem::path& path, const SvgOptions& options) {
  const std::string text = render_svg(stats, options);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << text;
  if (!out) throw IoError("failed writing " + path.string());
}

}  // namespace fidest::harness
