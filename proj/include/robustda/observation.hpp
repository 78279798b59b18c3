#pragma once

#include <vector>

#include "robustda/covariance.hpp"
#include "robustda/types.hpp"

namespace robustda {

/// Linear observation operator. Identity and index-subset operators carry a
/// grid index per observation row, which covariance localization relies on.
class ObsOperator {
 public:
  ObsOperator() = default;

  static ObsOperator identity(int n);
  static ObsOperator subset(int n, std::vector<int> indices);
  static ObsOperator matrix(Matrix h);

  int state_dim() const { return state_dim_; }
  int obs_dim() const { return obs_dim_; }

  Vector apply(const Vector& x) const;           // H x
  Vector adjoint_apply(const Vector& w) const;   // H^T w

  bool has_grid_indices() const { return kind_ != Kind::kMatrix; }
  int grid_index(int row) const;

  /// Restriction to a subset of observation rows (used by local analyses).
  ObsOperator rows(const std::vector<int>& row_ids) const;

 private:
  enum class Kind { kIdentity, kSubset, kMatrix };
  Kind kind_ = Kind::kIdentity;
  int state_dim_ = 0;
  int obs_dim_ = 0;
  std::vector<int> indices_;
  Matrix h_;
};

/// Observations at one time: values y, diagonal error covariance R and the
/// operator mapping state space to observation space.
struct ObservationSet {
  double time = 0.0;
  Vector values;
  Covariance obs_cov;
  ObsOperator op;

  int dim() const { return static_cast<int>(values.size()); }
  void validate() const;
};

}  // namespace robustda
