#pragma once

#include <functional>

#include "robustda/types.hpp"

namespace robustda {

/// Smooth unconstrained minimization problem. cost_and_gradient fills the
/// gradient and returns the cost; it may return +inf to reject a trial point
/// (the line search then backtracks).
struct OptimizeProblem {
  int dim = 0;
  std::function<double(const Vector&, Vector&)> cost_and_gradient;
  Vector x0;
};

struct OptimizeReport {
  Vector x_opt;
  double cost = 0.0;
  double grad_norm = 0.0;  // inf-norm at x_opt
  int iterations = 0;
  bool converged = false;
};

/// Default gradient tolerance, scaled by sqrt(dim).
double default_grad_tol(int dim);

/// Limited-memory quasi-Newton (memory 10) with Armijo backtracking.
/// Stops when ||grad||_inf <= tol_grad or after max_iter iterations.
/// Accepted iterates are monotone non-increasing in cost. Throws
/// NonFiniteError when the cost or gradient is non-finite at the start or
/// the search cannot recover from non-finite trial points.
OptimizeReport minimize(const OptimizeProblem& p, double tol_grad, int max_iter);

}  // namespace robustda
