#pragma once

#include <functional>
#include <span>
#include <vector>

namespace fidest {

struct CgSettings {
  double grad_step = 1e-5;  // central finite-difference step
  double grad_tol = 1e-7;   // stop when the gradient norm falls below this
  int max_iterations = 200;
  // Newton steps on the finite-difference gradient after CG stops. Line
  // searches on function values cannot resolve an optimum below about
  // sqrt(machine epsilon); the polish drives the gradient to its noise floor.
  int polish_steps = 4;
  double hessian_step = 1e-4;
};

struct CgResult {
  std::vector<double> x;
  double value = 0.0;
  int iterations = 0;
  int evaluations = 0;
  bool converged = false;
};

using Objective = std::function<double(std::span<const double>)>;

// Maximizes f by nonlinear conjugate gradient: Polak-Ribiere (clamped at
// zero) directions, central finite-difference gradients and a backtracking
// Armijo line search. The direction resets to steepest ascent every
// x.size() iterations or whenever it stops being an ascent direction.
// After CG stops, up to polish_steps Newton steps (finite-difference Hessian,
// restricted to directions of negative curvature) are taken while each one
// lowers the gradient norm.
CgResult maximize_conjugate_gradient(const Objective& f, std::vector<double> x0,
                                     const CgSettings& settings = {});

// Central-difference gradient of f at x.
std::vector<double> finite_difference_gradient(const Objective& f, std::span<const double> x, double step);

}  // namespace fidest
