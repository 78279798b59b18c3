#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <string>

namespace robustda {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// Model state: a real vector tagged with its validity time (model time units).
struct StateVector {
  Vector values;
  double time = 0.0;

  StateVector() = default;
  StateVector(Vector v, double t) : values(std::move(v)), time(t) {}

  int dim() const { return static_cast<int>(values.size()); }
};

/// Thrown when an integration or optimization step produces NaN/Inf.
class NonFiniteError : public std::runtime_error {
 public:
  explicit NonFiniteError(const std::string& what) : std::runtime_error(what) {}
};

class DimensionError : public std::invalid_argument {
 public:
  explicit DimensionError(const std::string& what) : std::invalid_argument(what) {}
};

inline void require_same_dim(const Vector& a, const Vector& b, const char* where) {
  if (a.size() != b.size()) {
    throw DimensionError(std::string(where) + ": dimension mismatch (" +
                         std::to_string(a.size()) + " vs " + std::to_string(b.size()) + ")");
  }
}

}  // namespace robustda
