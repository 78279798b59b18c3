#pragma once

#include "robustda/observation.hpp"
#include "robustda/types.hpp"

namespace robustda {

/// Huber threshold: number of scaled standard deviations after which the
/// penalty switches from quadratic to linear.
struct HuberParams {
  double tau = 1.0;

  void validate() const {
    if (!(tau > 0.0)) throw std::invalid_argument("HuberParams: tau must be positive");
  }
};

/// How the shrinkage (proximal) subproblem is solved.
///
/// kElementwise is the exact per-coordinate proximal minimizer of the
/// separable subproblem. kPaperBlock applies a single 2-norm block shrinkage
/// to the whole vector; it is kept for literal reproduction of the printed
/// procedures and is not the exact minimizer of the separable objective.
enum class ShrinkMode { kElementwise, kPaperBlock };

/// ADMM iteration bundle shared by every ADMM solver: the auxiliary variable
/// z, the Lagrange multipliers, the penalty and its growth factor.
struct AdmmState {
  Vector z;
  Vector lambda;
  double mu = 1.0;
  double rho = 1.6;
  int outer_iter = 0;

  void validate() const {
    if (!(mu > 0.0)) throw std::invalid_argument("AdmmState: mu must be positive");
    if (!(rho > 1.0)) throw std::invalid_argument("AdmmState: rho must exceed 1");
    if (z.size() != lambda.size()) throw DimensionError("AdmmState: z and lambda sizes differ");
  }
};

/// z = R^{-1/2} (H(x) - y).
Vector scaled_innovation(const StateVector& x, const ObservationSet& obs);

/// Sum of the per-entry Huber penalty: a^2/2 inside tau, |a| - 1/2 outside.
double huber_norm(const Vector& z, const HuberParams& p);
double huber_penalty(double a, double tau);

/// Minimizer of ||z||_1 + mu/2 ||d - lambda/mu - z||^2.
/// Elementwise mode is exact soft-thresholding at 1/mu; block mode shrinks
/// the 2-norm of the whole vector.
Vector l1_shrinkage(double mu, const Vector& d, const Vector& lambda, ShrinkMode mode);

/// Minimizer of ||z||_hub + mu/2 ||d - lambda/mu - z||^2.
/// Elementwise mode returns, per coordinate, the point attaining the infimum
/// of the piecewise objective (for tau != 1 the penalty jumps at |z| = tau,
/// so the infimum may sit immediately outside the quadratic region; the
/// float successor of tau is returned there). Block mode is the literal
/// printed procedure: branch on |d_l| >= tau, block 2-norm on the L1 branch.
Vector huber_shrinkage(double mu, const Vector& d, const Vector& lambda, const HuberParams& p,
                       ShrinkMode mode);

/// Half-quadratic scaling factors: u_l = 1 for |z_l| <= tau, tau/|z_l| beyond.
Vector hq_weights(const Vector& z, const HuberParams& p);

/// ADMM modified data: y' = y + R^{1/2} (z + lambda/mu), R' = R/mu.
ObservationSet modified_observations(const ObservationSet& obs, const AdmmState& st);

/// Half-quadratic modified covariance R' = R^{1/2} diag(2/u) R^{1/2};
/// for diagonal R each variance becomes 2 R_ll / u_l.
Covariance hq_modified_covariance(const Covariance& r, const Vector& u);

/// Univariate Laplace log-density at z with scale lambda (diagnostic).
double laplace_loglik(double z, double lambda_scale);

}  // namespace robustda
