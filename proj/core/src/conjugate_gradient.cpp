#include "fidest/optimizer/conjugate_gradient.hpp"

#include <algorithm>
#include <cmath>

#include "fidest/quantum/eigen.hpp"

namespace fidest {
namespace {

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

constexpr double kArmijo = 1e-4;
constexpr double kShrink = 0.5;
constexpr double kMaxStepLength = 1.0;
constexpr int kMaxBacktracks = 60;

}  // namespace

std::vector<double> finite_difference_gradient(const Objective& f, std::span<const double> x, double step) {
  std::vector<double> g(x.size());
  std::vector<double> probe(x.begin(), x.end());
  for (std::size_t i = 0; i < x.size(); ++i) {
    probe[i] = x[i] + step;
    const double up = f(probe);
    probe[i] = x[i] - step;
    const double down = f(probe);
    probe[i] = x[i];
    g[i] = (up - down) / (2.0 * step);
  }
  return g;
}

namespace {

void polish(const Objective& f, std::vector<double>& x, double& fx, std::vector<double>& g, const CgSettings& settings,
            int& evals) {
  const std::size_t n = x.size();
  if (n == 0 || n > kMaxEigenDim) return;
  for (int step = 0; step < settings.polish_steps; ++step) {
    const double gnorm = std::sqrt(dot(g, g));
    if (gnorm == 0.0) return;
    ComplexMatrix h(n, n);
    std::vector<double> probe = x;
    for (std::size_t i = 0; i < n; ++i) {
      probe[i] = x[i] + settings.hessian_step;
      const auto gp = finite_difference_gradient(f, probe, settings.grad_step);
      probe[i] = x[i] - settings.hessian_step;
      const auto gm = finite_difference_gradient(f, probe, settings.grad_step);
      probe[i] = x[i];
      evals += static_cast<int>(4 * n);
      for (std::size_t j = 0; j < n; ++j) h(i, j) = (gp[j] - gm[j]) / (2.0 * settings.hessian_step);
    }
    const auto eig = hermitian_eigensystem(HermitianMatrix::hermitize(h));
    double scale = 0.0;
    for (double v : eig.values) scale = std::max(scale, std::abs(v));
    std::vector<double> delta(n, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
      const double lambda = eig.values[k];
      if (lambda >= -1e-6 * scale) continue;
      std::vector<double> v(n);
      for (std::size_t i = 0; i < n; ++i) v[i] = eig.vectors[k][i].real();
      const double c = dot(v, g) / lambda;
      for (std::size_t i = 0; i < n; ++i) delta[i] -= c * v[i];
    }
    std::vector<double> trial(n);
    for (std::size_t i = 0; i < n; ++i) trial[i] = x[i] + delta[i];
    const double ftrial = f(trial);
    const auto gtrial = finite_difference_gradient(f, trial, settings.grad_step);
    evals += static_cast<int>(1 + 2 * n);
    if (std::sqrt(dot(gtrial, gtrial)) >= gnorm || ftrial < fx - 1e-14 * std::max(1.0, std::abs(fx))) return;
    x = std::move(trial);
    fx = ftrial;
    g = gtrial;
  }
}

}  // namespace

CgResult maximize_conjugate_gradient(const Objective& f, std::vector<double> x0, const CgSettings& settings) {
  CgResult res;
  const std::size_t n = x0.size();
  int evals = 0;
  auto eval = [&](std::span<const double> x) {
    ++evals;
    return f(x);
  };
  auto gradient = [&](std::span<const double> x) {
    evals += static_cast<int>(2 * n);
    return finite_difference_gradient(f, x, settings.grad_step);
  };

  std::vector<double> x = std::move(x0);
  double fx = eval(x);
  std::vector<double> g = gradient(x);
  std::vector<double> dir = g;
  double alpha = 0.0;
  int since_reset = 0;

  int iter = 0;
  for (; iter < settings.max_iterations; ++iter) {
    const double gnorm = std::sqrt(dot(g, g));
    if (gnorm < settings.grad_tol) {
      res.converged = true;
      break;
    }
    double slope = dot(g, dir);
    if (slope <= 0.0 || since_reset >= static_cast<int>(n)) {
      dir = g;
      slope = gnorm * gnorm;
      since_reset = 0;
    }
    const double dnorm = std::sqrt(dot(dir, dir));
    // Warm-start the step from the last accepted one, capped in parameter space.
    double step = alpha > 0.0 ? 2.0 * alpha : 1.0;
    step = std::min(step, kMaxStepLength / dnorm);

    std::vector<double> trial(n);
    double ftrial = fx;
    bool accepted = false;
    for (int bt = 0; bt < kMaxBacktracks; ++bt) {
      for (std::size_t i = 0; i < n; ++i) trial[i] = x[i] + step * dir[i];
      ftrial = eval(trial);
      if (ftrial >= fx + kArmijo * step * slope) {
        accepted = true;
        break;
      }
      step *= kShrink;
    }
    if (!accepted) {
      // No ascent along dir at resolvable step sizes: treat as stationary.
      if (since_reset == 0) break;
      dir = g;
      since_reset = 0;
      alpha = 0.0;
      continue;
    }
    alpha = step;
    x = trial;
    fx = ftrial;
    std::vector<double> g_new = gradient(x);
    double beta = 0.0;
    const double gg = dot(g, g);
    if (gg > 0.0) {
      double num = 0.0;
      for (std::size_t i = 0; i < n; ++i) num += g_new[i] * (g_new[i] - g[i]);
      beta = std::max(0.0, num / gg);
    }
    for (std::size_t i = 0; i < n; ++i) dir[i] = g_new[i] + beta * dir[i];
    g = std::move(g_new);
    ++since_reset;
  }
  polish(f, x, fx, g, settings, evals);
  if (!res.converged) res.converged = std::sqrt(dot(g, g)) < settings.grad_tol;
  res.x = std::move(x);
  res.value = fx;
  res.iterations = iter;
  res.evaluations = evals;
  return res;
}

}  // namespace fidest
