#include "robustda/model.hpp"

#include <algorithm>
#include <cmath>

namespace robustda {

namespace {

constexpr double kTimeTol = 1e-9;

bool near(double a, double b) { return std::abs(a - b) <= kTimeTol * std::max({1.0, std::abs(a), std::abs(b)}); }

}  // namespace

void ModelConfig::validate() const {
  if (n < 4) throw std::invalid_argument("ModelConfig: n must be >= 4 for the cyclic stencil");
  if (!(dt > 0.0)) throw std::invalid_argument("ModelConfig: dt must be positive");
}

Lorenz96Model::Lorenz96Model(const ModelConfig& cfg) : cfg_(cfg) { cfg_.validate(); }

void Lorenz96Model::rhs(const Vector& x, Vector& dxdt) const {
  const int n = cfg_.n;
  if (x.size() != n) throw DimensionError("Lorenz96Model::rhs: state dimension mismatch");
  dxdt.resize(n);
  for (int k = 0; k < n; ++k) {
    const int km1 = (k - 1 + n) % n;
    const int km2 = (k - 2 + n) % n;
    const int kp1 = (k + 1) % n;
    dxdt[k] = x[km1] * (x[kp1] - x[km2]) - x[k] + cfg_.forcing;
  }
}

void Lorenz96Model::jacobian_apply(const Vector& x, const Vector& v, Vector& jv) const {
  const int n = cfg_.n;
  if (x.size() != n || v.size() != n) throw DimensionError("Lorenz96Model::jacobian_apply: dimension mismatch");
  jv.resize(n);
  for (int k = 0; k < n; ++k) {
    const int km1 = (k - 1 + n) % n;
    const int km2 = (k - 2 + n) % n;
    const int kp1 = (k + 1) % n;
    jv[k] = v[km1] * (x[kp1] - x[km2]) + x[km1] * (v[kp1] - v[km2]) - v[k];
  }
}

void Lorenz96Model::jacobian_transpose_apply(const Vector& x, const Vector& w, Vector& jtw) const {
  const int n = cfg_.n;
  if (x.size() != n || w.size() != n) {
    throw DimensionError("Lorenz96Model::jacobian_transpose_apply: dimension mismatch");
  }
  jtw.setZero(n);
  // Scatter the row entries of J; this is the exact transpose of jacobian_apply.
  for (int k = 0; k < n; ++k) {
    const int km1 = (k - 1 + n) % n;
    const int km2 = (k - 2 + n) % n;
    const int kp1 = (k + 1) % n;
    jtw[km1] += w[k] * (x[kp1] - x[km2]);
    jtw[kp1] += w[k] * x[km1];
    jtw[km2] -= w[k] * x[km1];
    jtw[k] -= w[k];
  }
}

LinearModel::LinearModel(Matrix a) : a_(std::move(a)) {
  if (a_.rows() != a_.cols()) throw std::invalid_argument("LinearModel: matrix must be square");
}

Vector lorenz96_rhs(const StateVector& x, const ModelConfig& cfg) {
  Lorenz96Model model(cfg);
  Vector out;
  model.rhs(x.values, out);
  return out;
}

std::size_t Trajectory::index_at_time(double t) const {
  auto it = std::lower_bound(states.begin(), states.end(), t - kTimeTol * std::max(1.0, std::abs(t)),
                             [](const StateVector& s, double v) { return s.time < v; });
  if (it == states.end() || !near(it->time, t)) {
    throw std::invalid_argument("Trajectory: no stored state at time " + std::to_string(t));
  }
  return static_cast<std::size_t>(it - states.begin());
}

Vector rk4_step(const Model& model, const Vector& x, double h) {
  Vector k1, k2, k3, k4;
  model.rhs(x, k1);
  model.rhs(x + (0.5 * h) * k1, k2);
  model.rhs(x + (0.5 * h) * k2, k3);
  model.rhs(x + h * k3, k4);
  return x + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

Vector rk4_tangent_step(const Model& model, const Vector& x, double h, const Vector& dx) {
  Vector k1, k2, k3;
  model.rhs(x, k1);
  const Vector s2 = x + (0.5 * h) * k1;
  model.rhs(s2, k2);
  const Vector s3 = x + (0.5 * h) * k2;
  model.rhs(s3, k3);
  const Vector s4 = x + h * k3;

  Vector dk1, dk2, dk3, dk4;
  model.jacobian_apply(x, dx, dk1);
  model.jacobian_apply(s2, dx + (0.5 * h) * dk1, dk2);
  model.jacobian_apply(s3, dx + (0.5 * h) * dk2, dk3);
  model.jacobian_apply(s4, dx + h * dk3, dk4);
  return dx + (h / 6.0) * (dk1 + 2.0 * dk2 + 2.0 * dk3 + dk4);
}

Vector rk4_adjoint_step(const Model& model, const Vector& x, double h, const Vector& a) {
  Vector k1, k2, k3;
  model.rhs(x, k1);
  const Vector s2 = x + (0.5 * h) * k1;
  model.rhs(s2, k2);
  const Vector s3 = x + (0.5 * h) * k2;
  model.rhs(s3, k3);
  const Vector s4 = x + h * k3;

  // Reverse sweep through the four stages (exact transpose of the tangent step).
  Vector s4bar, s3bar, s2bar, s1bar;
  model.jacobian_transpose_apply(s4, (h / 6.0) * a, s4bar);
  model.jacobian_transpose_apply(s3, (h / 3.0) * a + h * s4bar, s3bar);
  model.jacobian_transpose_apply(s2, (h / 3.0) * a + (0.5 * h) * s3bar, s2bar);
  model.jacobian_transpose_apply(x, (h / 6.0) * a + (0.5 * h) * s2bar, s1bar);
  return a + s1bar + s2bar + s3bar + s4bar;
}

Trajectory integrate(const Model& model, const StateVector& x0, double t_end, double dt,
                     std::span<const double> required_times) {
  if (x0.dim() != model.dim()) throw DimensionError("integrate: state dimension mismatch");
  if (!(t_end > x0.time)) throw std::invalid_argument("integrate: t_end must exceed the initial time");
  if (!(dt > 0.0)) throw std::invalid_argument("integrate: dt must be positive");
  if (!x0.values.allFinite()) throw NonFiniteError("integrate: non-finite initial state");

  std::vector<double> breaks(required_times.begin(), required_times.end());
  breaks.push_back(t_end);
  std::sort(breaks.begin(), breaks.end());

  Trajectory traj;
  traj.states.push_back(x0);
  StateVector cur = x0;
  for (double b : breaks) {
    if (b <= cur.time + kTimeTol * std::max(1.0, std::abs(b))) {
      if (near(b, cur.time)) continue;
      throw std::invalid_argument("integrate: required time before the initial time");
    }
    while (!near(cur.time, b)) {
      const double h = std::min(dt, b - cur.time);
      Vector next = rk4_step(model, cur.values, h);
      if (!next.allFinite()) {
        throw NonFiniteError("integrate: non-finite state at t=" + std::to_string(cur.time + h));
      }
      cur.values = std::move(next);
      cur.time = (b - cur.time <= dt) ? b : cur.time + h;
      traj.states.push_back(cur);
    }
  }
  return traj;
}

Vector tangent_linear(const Model& model, const Trajectory& traj, const Vector& dx0) {
  if (traj.states.empty()) throw std::invalid_argument("tangent_linear: empty trajectory");
  if (dx0.size() != traj.dim()) throw DimensionError("tangent_linear: perturbation dimension mismatch");
  Vector dx = dx0;
  for (std::size_t k = 1; k < traj.states.size(); ++k) {
    const double h = traj.states[k].time - traj.states[k - 1].time;
    dx = rk4_tangent_step(model, traj.states[k - 1].values, h, dx);
  }
  return dx;
}

Vector adjoint(const Model& model, const Trajectory& traj, const Vector& dxN) {
  if (traj.states.empty()) throw std::invalid_argument("adjoint: empty trajectory");
  if (dxN.size() != traj.dim()) throw DimensionError("adjoint: sensitivity dimension mismatch");
  Vector a = dxN;
  for (std::size_t k = traj.states.size(); k-- > 1;) {
    const double h = traj.states[k].time - traj.states[k - 1].time;
    a = rk4_adjoint_step(model, traj.states[k - 1].values, h, a);
  }
  return a;
}

}  // namespace robustda
