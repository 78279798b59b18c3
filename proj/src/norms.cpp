#include "robustda/norms.hpp"

#include <cmath>
#include <limits>

namespace robustda {

namespace {

double sign_of(double v) { return v < 0.0 ? -1.0 : 1.0; }

double soft_threshold(double v, double t) {
  const double m = std::abs(v) - t;
  return m > 0.0 ? sign_of(v) * m : 0.0;
}

/// Exact minimizer of g_hub(z) + mu/2 (v - z)^2 over z.
///
/// Candidates: the quadratic-branch minimizer mu v/(1+mu) clamped to
/// [-tau, tau]; the linear-branch stationary point v - sign(v)/mu when it
/// lies beyond tau; and the linear branch evaluated immediately outside tau
/// (the penalty drops by (tau-1)^2/2 when crossing the threshold, so for
/// tau != 1 the infimum can sit at the open boundary).
double huber_prox_scalar(double v, double mu, double tau) {
  const double s = sign_of(v);
  const double a = std::abs(v);

  auto objective = [&](double z) { return huber_penalty(z, tau) + 0.5 * mu * (a - z) * (a - z); };

  double best_z = std::min(mu * a / (1.0 + mu), tau);
  double best_f = objective(best_z);

  const double boundary = std::nextafter(tau, std::numeric_limits<double>::infinity());
  const double fb = objective(boundary);
  if (fb < best_f) {
    best_f = fb;
    best_z = boundary;
  }

  const double interior = a - 1.0 / mu;
  if (interior > tau) {
    const double fi = objective(interior);
    if (fi < best_f) {
      best_f = fi;
      best_z = interior;
    }
  }
  return s * best_z;
}

}  // namespace

Vector scaled_innovation(const StateVector& x, const ObservationSet& obs) {
  obs.validate();
  return obs.obs_cov.inv_sqrt_apply(obs.op.apply(x.values) - obs.values);
}

double huber_penalty(double a, double tau) {
  const double m = std::abs(a);
  return m <= tau ? 0.5 * a * a : m - 0.5;
}

double huber_norm(const Vector& z, const HuberParams& p) {
  p.validate();
  double s = 0.0;
  for (int l = 0; l < z.size(); ++l) s += huber_penalty(z[l], p.tau);
  return s;
}

Vector l1_shrinkage(double mu, const Vector& d, const Vector& lambda, ShrinkMode mode) {
  if (!(mu > 0.0)) throw std::invalid_argument("l1_shrinkage: mu must be positive");
  require_same_dim(d, lambda, "l1_shrinkage");
  const Vector v = d - lambda / mu;
  if (mode == ShrinkMode::kElementwise) {
    Vector z(v.size());
    for (int l = 0; l < v.size(); ++l) z[l] = soft_threshold(v[l], 1.0 / mu);
    return z;
  }
  const double nv = v.norm();
  if (nv == 0.0) return Vector::Zero(v.size());
  const double factor = std::max(nv - 1.0 / mu, 0.0) / nv;
  return factor * v;
}

Vector huber_shrinkage(double mu, const Vector& d, const Vector& lambda, const HuberParams& p,
                       ShrinkMode mode) {
  if (!(mu > 0.0)) throw std::invalid_argument("huber_shrinkage: mu must be positive");
  require_same_dim(d, lambda, "huber_shrinkage");
  p.validate();
  const Vector v = d - lambda / mu;

  if (mode == ShrinkMode::kElementwise) {
    Vector z(v.size());
    for (int l = 0; l < v.size(); ++l) z[l] = huber_prox_scalar(v[l], mu, p.tau);
    return z;
  }

  // Literal printed procedure: branch on the innovation d, block 2-norm
  // shrinkage on the L1 branch, damped quadratic update otherwise.
  const double nv = v.norm();
  const double block = std::max(nv - 1.0 / mu, 0.0);
  Vector z(v.size());
  for (int l = 0; l < v.size(); ++l) {
    if (std::abs(d[l]) >= p.tau) {
      z[l] = nv == 0.0 ? 0.0 : block * v[l] / nv;
    } else {
      z[l] = mu / (1.0 + mu) * v[l];
    }
  }
  return z;
}

Vector hq_weights(const Vector& z, const HuberParams& p) {
  p.validate();
  Vector u(z.size());
  for (int l = 0; l < z.size(); ++l) {
    const double m = std::abs(z[l]);
    u[l] = m <= p.tau ? 1.0 : p.tau / m;
  }
  return u;
}

ObservationSet modified_observations(const ObservationSet& obs, const AdmmState& st) {
  obs.validate();
  if (st.z.size() != obs.dim() || st.lambda.size() != obs.dim()) {
    throw DimensionError("modified_observations: ADMM state dimension mismatch");
  }
  if (!(st.mu > 0.0)) throw std::invalid_argument("modified_observations: mu must be positive");
  ObservationSet out = obs;
  out.values = obs.values + obs.obs_cov.sqrt_apply(st.z + st.lambda / st.mu);
  out.obs_cov = obs.obs_cov.scaled(1.0 / st.mu);
  return out;
}

Covariance hq_modified_covariance(const Covariance& r, const Vector& u) {
  if (u.size() != r.dim()) throw DimensionError("hq_modified_covariance: weight dimension mismatch");
  if ((u.array() <= 0.0).any()) {
    throw std::invalid_argument("hq_modified_covariance: weights must be positive");
  }
  if (r.is_diagonal()) {
    return Covariance::diagonal(2.0 * r.variances().cwiseQuotient(u));
  }
  Matrix root = r.dense_matrix();  // rebuild R^{1/2} diag(2/u) R^{1/2}
  Matrix half(r.dim(), r.dim());
  for (int j = 0; j < r.dim(); ++j) half.col(j) = r.sqrt_apply(Vector::Unit(r.dim(), j));
  return Covariance::dense(half * (2.0 / u.array()).matrix().asDiagonal() * half);
}

double laplace_loglik(double z, double lambda_scale) {
  if (!(lambda_scale > 0.0)) throw std::invalid_argument("laplace_loglik: scale must be positive");
  return -std::log(2.0 * lambda_scale) - std::abs(z) / lambda_scale;
}

}  // namespace robustda
