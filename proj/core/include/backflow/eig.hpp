#pragma once

#include <Eigen/Dense>

namespace backflow {

/// Algebraically smallest eigenpair of a dense real symmetric matrix.
struct EigenPair {
  double value;
  Eigen::VectorXd vector;  // unit 2-norm; largest-magnitude entry positive
  double residual;         // ||K v - value * v||_2
};

/// Smallest eigenvalue only (the matrix is destroyed internally; pass by
/// value or keep a copy if the entries are still needed).
double min_eigenvalue(Eigen::MatrixXd matrix);

/// Smallest eigenpair with residual check. Throws std::invalid_argument on
/// non-symmetric input (beyond 1e-12 relative) and std::runtime_error with
/// diagnostics if the backend fails to converge.
EigenPair min_eigpair(const Eigen::MatrixXd& matrix);

}  // namespace backflow
