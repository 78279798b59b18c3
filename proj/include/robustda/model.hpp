#pragma once

#include <span>
#include <vector>

#include "robustda/types.hpp"

namespace robustda {

/// Configuration of the Lorenz-96 system and its integrator.
struct ModelConfig {
  int n = 40;          // state dimension; the cyclic stencil needs n >= 4
  double forcing = 8.0;
  double dt = 0.005;   // fixed RK4 step

  void validate() const;
};

/// Autonomous ODE right-hand side with exact Jacobian actions.
///
/// jacobian_apply computes J(x) v and jacobian_transpose_apply computes
/// J(x)^T w; both must be exact linearizations of rhs so that the discrete
/// tangent-linear and adjoint maps transpose each other to machine precision.
class Model {
 public:
  virtual ~Model() = default;
  virtual int dim() const = 0;
  virtual void rhs(const Vector& x, Vector& dxdt) const = 0;
  virtual void jacobian_apply(const Vector& x, const Vector& v, Vector& jv) const = 0;
  virtual void jacobian_transpose_apply(const Vector& x, const Vector& w, Vector& jtw) const = 0;
};

/// Lorenz-96: dx_k/dt = x_{k-1}(x_{k+1} - x_{k-2}) - x_k + F, cyclic indices.
class Lorenz96Model final : public Model {
 public:
  explicit Lorenz96Model(const ModelConfig& cfg);

  int dim() const override { return cfg_.n; }
  void rhs(const Vector& x, Vector& dxdt) const override;
  void jacobian_apply(const Vector& x, const Vector& v, Vector& jv) const override;
  void jacobian_transpose_apply(const Vector& x, const Vector& w, Vector& jtw) const override;

  const ModelConfig& config() const { return cfg_; }

 private:
  ModelConfig cfg_;
};

/// Linear test system dx/dt = A x (swap-in model for integrator/adjoint tests).
class LinearModel final : public Model {
 public:
  explicit LinearModel(Matrix a);

  int dim() const override { return static_cast<int>(a_.rows()); }
  void rhs(const Vector& x, Vector& dxdt) const override { dxdt = a_ * x; }
  void jacobian_apply(const Vector&, const Vector& v, Vector& jv) const override { jv = a_ * v; }
  void jacobian_transpose_apply(const Vector&, const Vector& w, Vector& jtw) const override {
    jtw = a_.transpose() * w;
  }

 private:
  Matrix a_;
};

/// Discrete trajectory: the state at every RK4 step, strictly increasing times.
struct Trajectory {
  std::vector<StateVector> states;

  int dim() const { return states.empty() ? 0 : states.front().dim(); }
  std::size_t size() const { return states.size(); }
  const StateVector& front() const { return states.front(); }
  const StateVector& back() const { return states.back(); }

  /// Index of the stored state at time t (within a relative tolerance).
  std::size_t index_at_time(double t) const;
  const StateVector& at_time(double t) const { return states[index_at_time(t)]; }
};

/// Free-function form of the Lorenz-96 tendency.
Vector lorenz96_rhs(const StateVector& x, const ModelConfig& cfg);

/// One classical RK4 step of size h from state x.
Vector rk4_step(const Model& model, const Vector& x, double h);

/// Exact linearization of rk4_step about x, applied to dx.
Vector rk4_tangent_step(const Model& model, const Vector& x, double h, const Vector& dx);

/// Transpose of rk4_tangent_step (discrete adjoint of one step).
Vector rk4_adjoint_step(const Model& model, const Vector& x, double h, const Vector& a);

/// Integrate from x0 to t_end with fixed step dt. The final step of each
/// sub-interval is shortened so the trajectory lands exactly on every
/// required output time and on t_end. Throws NonFiniteError if any step
/// produces NaN/Inf.
Trajectory integrate(const Model& model, const StateVector& x0, double t_end, double dt,
                     std::span<const double> required_times = {});

/// Propagate a perturbation of the initial state through the exact
/// linearization of the discrete RK4 map along traj.
Vector tangent_linear(const Model& model, const Trajectory& traj, const Vector& dx0);

/// Transpose of tangent_linear: maps a sensitivity at the final time back to
/// the initial time.
Vector adjoint(const Model& model, const Trajectory& traj, const Vector& dxN);

}  // namespace robustda
