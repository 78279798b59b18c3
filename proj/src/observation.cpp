#include "robustda/observation.hpp"

namespace robustda {

ObsOperator ObsOperator::identity(int n) {
  ObsOperator op;
  op.kind_ = Kind::kIdentity;
  op.state_dim_ = n;
  op.obs_dim_ = n;
  return op;
}

ObsOperator ObsOperator::subset(int n, std::vector<int> indices) {
  for (int i : indices) {
    if (i < 0 || i >= n) throw std::invalid_argument("ObsOperator::subset: index out of range");
  }
  ObsOperator op;
  op.kind_ = Kind::kSubset;
  op.state_dim_ = n;
  op.obs_dim_ = static_cast<int>(indices.size());
  op.indices_ = std::move(indices);
  return op;
}

ObsOperator ObsOperator::matrix(Matrix h) {
  ObsOperator op;
  op.kind_ = Kind::kMatrix;
  op.state_dim_ = static_cast<int>(h.cols());
  op.obs_dim_ = static_cast<int>(h.rows());
  op.h_ = std::move(h);
  return op;
}

Vector ObsOperator::apply(const Vector& x) const {
  if (x.size() != state_dim_) throw DimensionError("ObsOperator::apply: state dimension mismatch");
  switch (kind_) {
    case Kind::kIdentity:
      return x;
    case Kind::kSubset: {
      Vector y(obs_dim_);
      for (int i = 0; i < obs_dim_; ++i) y[i] = x[indices_[i]];
      return y;
    }
    case Kind::kMatrix:
      return h_ * x;
  }
  throw std::logic_error("ObsOperator::apply: unreachable");
}

Vector ObsOperator::adjoint_apply(const Vector& w) const {
  if (w.size() != obs_dim_) throw DimensionError("ObsOperator::adjoint_apply: obs dimension mismatch");
  switch (kind_) {
    case Kind::kIdentity:
      return w;
    case Kind::kSubset: {
      Vector x = Vector::Zero(state_dim_);
      for (int i = 0; i < obs_dim_; ++i) x[indices_[i]] += w[i];
      return x;
    }
    case Kind::kMatrix:
      return h_.transpose() * w;
  }
  throw std::logic_error("ObsOperator::adjoint_apply: unreachable");
}

int ObsOperator::grid_index(int row) const {
  if (row < 0 || row >= obs_dim_) throw std::invalid_argument("ObsOperator::grid_index: row out of range");
  switch (kind_) {
    case Kind::kIdentity:
      return row;
    case Kind::kSubset:
      return indices_[row];
    case Kind::kMatrix:
      throw std::logic_error("ObsOperator::grid_index: matrix operator has no grid indices");
  }
  throw std::logic_error("ObsOperator::grid_index: unreachable");
}

ObsOperator ObsOperator::rows(const std::vector<int>& row_ids) const {
  switch (kind_) {
    case Kind::kIdentity: {
      return subset(state_dim_, row_ids);
    }
    case Kind::kSubset: {
      std::vector<int> sub;
      sub.reserve(row_ids.size());
      for (int r : row_ids) {
        if (r < 0 || r >= obs_dim_) throw std::invalid_argument("ObsOperator::rows: row out of range");
        sub.push_back(indices_[r]);
      }
      return subset(state_dim_, std::move(sub));
    }
    case Kind::kMatrix: {
      Matrix h(row_ids.size(), state_dim_);
      for (std::size_t i = 0; i < row_ids.size(); ++i) h.row(static_cast<int>(i)) = h_.row(row_ids[i]);
      return matrix(std::move(h));
    }
  }
  throw std::logic_error("ObsOperator::rows: unreachable");
}

void ObservationSet::validate() const {
  if (values.size() != op.obs_dim()) {
    throw DimensionError("ObservationSet: values length does not match operator output dimension");
  }
  if (obs_cov.dim() != values.size()) {
    throw DimensionError("ObservationSet: covariance dimension does not match values");
  }
}

}  // namespace robustda
