#include "robustda/optimizer.hpp"

#include <cmath>
#include <deque>
#include <limits>

namespace robustda {

namespace {

constexpr int kMemory = 10;
constexpr double kArmijoC1 = 1e-4;
constexpr int kMaxLineSearch = 60;

struct Pair {
  Vector s;
  Vector y;
  double rho;  // 1 / (y^T s)
};

Vector two_loop_direction(const Vector& g, const std::deque<Pair>& mem) {
  Vector q = g;
  std::vector<double> alpha(mem.size());
  for (std::size_t i = mem.size(); i-- > 0;) {
    alpha[i] = mem[i].rho * mem[i].s.dot(q);
    q -= alpha[i] * mem[i].y;
  }
  if (!mem.empty()) {
    const Pair& last = mem.back();
    q *= last.s.dot(last.y) / last.y.squaredNorm();
  }
  for (std::size_t i = 0; i < mem.size(); ++i) {
    const double beta = mem[i].rho * mem[i].y.dot(q);
    q += (alpha[i] - beta) * mem[i].s;
  }
  return q;
}

}  // namespace

double default_grad_tol(int dim) { return 1e-6 * std::sqrt(static_cast<double>(std::max(dim, 1))); }

OptimizeReport minimize(const OptimizeProblem& p, double tol_grad, int max_iter) {
  if (p.dim <= 0 || p.x0.size() != p.dim) throw std::invalid_argument("minimize: bad problem dimensions");
  if (!p.cost_and_gradient) throw std::invalid_argument("minimize: missing cost callable");

  Vector x = p.x0;
  Vector g(p.dim);
  double f = p.cost_and_gradient(x, g);
  if (!std::isfinite(f) || !g.allFinite()) {
    throw NonFiniteError("minimize: non-finite cost or gradient at the initial point");
  }

  std::deque<Pair> mem;
  OptimizeReport rep;
  rep.converged = false;
  int it = 0;
  Vector g_new(p.dim);

  while (true) {
    if (g.lpNorm<Eigen::Infinity>() <= tol_grad) {
      rep.converged = true;
      break;
    }
    if (it >= max_iter) break;

    Vector dir = -two_loop_direction(g, mem);
    double gd = g.dot(dir);
    if (!(gd < 0.0) || !dir.allFinite()) {
      mem.clear();
      dir = -g;
      gd = -g.squaredNorm();
    }

    double step = mem.empty() ? std::min(1.0, 1.0 / std::max(1e-12, g.norm())) : 1.0;
    double f_new = std::numeric_limits<double>::infinity();
    Vector x_new;
    bool accepted = false;
    for (int ls = 0; ls < kMaxLineSearch; ++ls) {
      x_new = x + step * dir;
      f_new = p.cost_and_gradient(x_new, g_new);
      if (std::isfinite(f_new) && g_new.allFinite() && f_new <= f + kArmijoC1 * step * gd) {
        accepted = true;
        break;
      }
      if (std::isfinite(f_new) && f_new > f) {
        // Quadratic interpolation of the step, kept within [0.1, 0.5] of it.
        const double denom = 2.0 * (f_new - f - step * gd);
        double trial = denom > 0.0 ? -gd * step * step / denom : 0.5 * step;
        trial = std::min(std::max(trial, 0.1 * step), 0.5 * step);
        step = trial;
      } else {
        step *= 0.5;
      }
    }
    if (!accepted) break;  // line search exhausted; keep the best iterate

    Vector s = x_new - x;
    Vector y = g_new - g;
    const double sy = s.dot(y);
    if (sy > 1e-10 * s.norm() * y.norm()) {
      mem.push_back({std::move(s), std::move(y), 1.0 / sy});
      if (mem.size() > kMemory) mem.pop_front();
    }
    x = std::move(x_new);
    f = f_new;
    g = g_new;
    ++it;
  }

  rep.x_opt = std::move(x);
  rep.cost = f;
  rep.grad_norm = g.lpNorm<Eigen::Infinity>();
  rep.iterations = it;
  return rep;
}

}  // namespace robustda
