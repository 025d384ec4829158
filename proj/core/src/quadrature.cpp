#include "fidest/closedform/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>

#include "fidest/closedform/bloch_moments.hpp"
#include "fidest/quantum/errors.hpp"

namespace fidest {
namespace {

GaussLegendre compute_gauss_legendre(std::size_t n) {
  GaussLegendre gl;
  gl.nodes.resize(n);
  gl.weights.resize(n);
  const double nd = static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i) {
    double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) / (nd + 0.5));
    double dp = 1.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (std::size_t j = 2; j <= n; ++j) {
        const double jd = static_cast<double>(j);
        const double p2 = ((2.0 * jd - 1.0) * x * p1 - (jd - 1.0) * p0) / jd;
        p0 = p1;
        p1 = p2;
      }
      dp = nd * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    gl.nodes[i] = x;
    gl.weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return gl;
}

}  // namespace

const GaussLegendre& gauss_legendre(std::size_t order) {
  if (order == 0) throw ValidationError("gauss_legendre: order must be positive");
  static std::mutex mu;
  static std::map<std::size_t, std::unique_ptr<GaussLegendre>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[order];
  if (!slot) {
    if (order == 1)
      slot = std::make_unique<GaussLegendre>(GaussLegendre{{0.0}, {2.0}});
    else
      slot = std::make_unique<GaussLegendre>(compute_gauss_legendre(order));
  }
  return *slot;
}

BlochMoments quadrature_bloch_moments(const MeasurementRecord& record, QuadratureGrid grid) {
  if (record.dim() != 2) throw DimensionMismatch("quadrature: qubit record required");
  if (grid.n_theta == 0 || grid.n_phi == 0) throw ValidationError("quadrature: empty grid");
  const auto& gl = gauss_legendre(grid.n_theta);

  std::vector<Vec3> outcome_dirs;
  outcome_dirs.reserve(record.size());
  for (const auto& s : record.outcomes()) outcome_dirs.push_back(bloch_vector(s));

  std::vector<double> cos_phi(grid.n_phi);
  std::vector<double> sin_phi(grid.n_phi);
  for (std::size_t j = 0; j < grid.n_phi; ++j) {
    const double phi = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(grid.n_phi);
    cos_phi[j] = std::cos(phi);
    sin_phi[j] = std::sin(phi);
  }

  // dpsi = d(cos t) dphi / (4 pi); the uniform phi rule has weight 2 pi / n_phi.
  const double phi_weight = 1.0 / (2.0 * static_cast<double>(grid.n_phi));
  BlochMoments out;
  for (std::size_t i = 0; i < grid.n_theta; ++i) {
    const double z = gl.nodes[i];
    const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double w_theta = gl.weights[i] * phi_weight;
    for (std::size_t j = 0; j < grid.n_phi; ++j) {
      const Vec3 n{rho * cos_phi[j], rho * sin_phi[j], z};
      double like = w_theta;
      for (const auto& u : outcome_dirs) like *= 0.5 * (1.0 + u[0] * n[0] + u[1] * n[1] + u[2] * n[2]);
      out.mass += like;
      for (int a = 0; a < 3; ++a) {
        out.first[a] += like * n[a];
        for (int b = a; b < 3; ++b) out.second[a][b] += like * n[a] * n[b];
      }
    }
  }
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < a; ++b) out.second[a][b] = out.second[b][a];
  return out;
}

PosteriorMoment quadrature_moment(const MeasurementRecord& record, QuadratureGrid grid) {
  return quadrature_bloch_moments(record, grid).to_posterior_moment(record.size());
}

}  // namespace fidest
