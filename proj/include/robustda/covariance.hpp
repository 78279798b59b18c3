#pragma once

#include <memory>

#include "robustda/types.hpp"

namespace robustda {

/// Symmetric positive-definite operator supporting apply, inverse-apply and
/// (symmetric) square-root apply. Houses B, R and their modifications.
/// Diagonal covariances store only the variances; dense ones keep a Cholesky
/// factorization and a symmetric eigen-square-root.
class Covariance {
 public:
  Covariance() = default;

  static Covariance diagonal(Vector variances);
  static Covariance scaled_identity(int n, double variance);
  static Covariance dense(Matrix spd);

  int dim() const { return dim_; }
  bool is_diagonal() const { return diagonal_; }
  const Vector& variances() const;  // diagonal only
  Matrix dense_matrix() const;      // materialized (any kind)

  Vector apply(const Vector& v) const;         // C v
  Vector solve(const Vector& v) const;         // C^{-1} v
  Vector sqrt_apply(const Vector& v) const;    // C^{1/2} v
  Vector inv_sqrt_apply(const Vector& v) const;

  /// v^T C^{-1} v
  double inv_quadratic(const Vector& v) const { return v.dot(solve(v)); }

  /// factor * C (same representation)
  Covariance scaled(double factor) const;

 private:
  bool diagonal_ = true;
  int dim_ = 0;
  Vector var_;       // diagonal variances
  Vector sqrt_var_;  // element-wise sqrt
  struct DenseData;
  std::shared_ptr<const DenseData> dense_;
};

}  // namespace robustda
