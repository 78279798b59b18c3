#include "robustda/covariance.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <cmath>

namespace robustda {

struct Covariance::DenseData {
  Matrix mat;
  Eigen::LLT<Matrix> llt;
  Matrix sqrt;
  Matrix inv_sqrt;
};

Covariance Covariance::diagonal(Vector variances) {
  if ((variances.array() <= 0.0).any() || !variances.allFinite()) {
    throw std::invalid_argument("Covariance::diagonal: variances must be finite and positive");
  }
  Covariance c;
  c.diagonal_ = true;
  c.dim_ = static_cast<int>(variances.size());
  c.sqrt_var_ = variances.array().sqrt().matrix();
  c.var_ = std::move(variances);
  return c;
}

Covariance Covariance::scaled_identity(int n, double variance) {
  return diagonal(Vector::Constant(n, variance));
}

Covariance Covariance::dense(Matrix spd) {
  if (spd.rows() != spd.cols()) throw std::invalid_argument("Covariance::dense: matrix must be square");
  const double asym = (spd - spd.transpose()).cwiseAbs().maxCoeff();
  if (asym > 1e-10 * (1.0 + spd.cwiseAbs().maxCoeff())) {
    throw std::invalid_argument("Covariance::dense: matrix is not symmetric");
  }
  auto data = std::make_shared<DenseData>();
  data->mat = 0.5 * (spd + spd.transpose());
  data->llt.compute(data->mat);
  if (data->llt.info() != Eigen::Success) {
    throw std::invalid_argument("Covariance::dense: matrix is not positive definite");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(data->mat);
  if ((es.eigenvalues().array() <= 0.0).any()) {
    throw std::invalid_argument("Covariance::dense: matrix is not positive definite");
  }
  const Vector root = es.eigenvalues().array().sqrt().matrix();
  data->sqrt = es.eigenvectors() * root.asDiagonal() * es.eigenvectors().transpose();
  data->inv_sqrt = es.eigenvectors() * root.cwiseInverse().asDiagonal() * es.eigenvectors().transpose();

  Covariance c;
  c.diagonal_ = false;
  c.dim_ = static_cast<int>(spd.rows());
  c.dense_ = std::move(data);
  return c;
}

const Vector& Covariance::variances() const {
  if (!diagonal_) throw std::logic_error("Covariance::variances: covariance is dense");
  return var_;
}

Matrix Covariance::dense_matrix() const {
  if (diagonal_) return var_.asDiagonal();
  return dense_->mat;
}

Vector Covariance::apply(const Vector& v) const {
  require_same_dim(v, diagonal_ ? var_ : Vector(dense_->mat.col(0)), "Covariance::apply");
  if (diagonal_) return var_.cwiseProduct(v);
  return dense_->mat * v;
}

Vector Covariance::solve(const Vector& v) const {
  if (v.size() != dim_) throw DimensionError("Covariance::solve: dimension mismatch");
  if (diagonal_) return v.cwiseQuotient(var_);
  return dense_->llt.solve(v);
}

Vector Covariance::sqrt_apply(const Vector& v) const {
  if (v.size() != dim_) throw DimensionError("Covariance::sqrt_apply: dimension mismatch");
  if (diagonal_) return sqrt_var_.cwiseProduct(v);
  return dense_->sqrt * v;
}

Vector Covariance::inv_sqrt_apply(const Vector& v) const {
  if (v.size() != dim_) throw DimensionError("Covariance::inv_sqrt_apply: dimension mismatch");
  if (diagonal_) return v.cwiseQuotient(sqrt_var_);
  return dense_->inv_sqrt * v;
}

Covariance Covariance::scaled(double factor) const {
  if (!(factor > 0.0)) throw std::invalid_argument("Covariance::scaled: factor must be positive");
  if (diagonal_) return diagonal(factor * var_);
  return dense(factor * dense_->mat);
}

}  // namespace robustda
