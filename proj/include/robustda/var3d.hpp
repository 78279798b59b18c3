#pragma once

#include <span>
#include <vector>

#include "robustda/covariance.hpp"
#include "robustda/model.hpp"
#include "robustda/norms.hpp"
#include "robustda/observation.hpp"
#include "robustda/optimizer.hpp""

namespace robustda {

enum class NormKind { kL2, kL1Admm, kHuberAdmm, kHuberHq };

struct InnerSolverConfig {
  double grad_tol = -1.0;  // <= 0 selects default_grad_tol(dim)
  int max_iter = 200;
};

struct Var3dConfig {
  Covariance background_cov;  // B, reused at all cycle times
  NormKind norm = NormKind::kL2;
  HuberParams huber{1.0};
  int outer_iters = 15;
  double admm_mu0 = 1.0;
  double admm_rho = 1.6;
  ShrinkMode shrink_mode = ShrinkMode::kElementwise;
  InnerSolverConfig inner;

  void validate() const;
};

/// Analysis plus solver traces. cost_history holds the method's objective per
/// outer iteration (a single entry for plain L2); constraint_residual_history
/// records ||R^{-1/2}(H(x)-y) - z||_2 per ADMM outer iteration. For 4D-Var
/// solvers, trajectory is the forward run from the analysis (strong
/// constraint); it is empty for 3D-Var.
struct AnalysisResult {
  StateVector analysis;
  std::vector<double> cost_history;
  std::vector<double> constraint_residual_history;
  std::vector<OptimizeReport> inner_reports;
  Trajectory trajectory;
};

AnalysisResult solve_l2_3dvar(const StateVector& xb, const ObservationSet& obs, const Var3dConfig& cfg);
AnalysisResult solve_l1_3dvar(const StateVector& xb, const ObservationSet& obs, const Var3dConfig& cfg);
AnalysisResult solve_huber_3dvar_admm(const StateVector& xb, const ObservationSet& obs,
                                      const Var3dConfig& cfg);
AnalysisResult solve_huber_3dvar_hq(const StateVector& xb, const ObservationSet& obs,
                                    const Var3dConfig& cfg);

/// Dispatch on cfg.norm.
AnalysisResult solve_3dvar(const StateVector& xb, const ObservationSet& obs, const Var3dConfig& cfg);

/// Sequential cycling: forecast the previous analysis to each observation
/// time with the model, then solve per cfg.norm.
std::vector<AnalysisResult> cycle_3dvar(const Model& model, double dt, const StateVector& x0b,
                                        std::span<const ObservationSet> obs_seq,
                                        const Var3dConfig& cfg);

}  // namespace robustda
