#include "backflow/eig.hpp"

#include <lapacke.h>

#include <cmath>
#include <stdexcept>
#include <string>

namespace backflow {

namespace {

void require_symmetric(const Eigen::MatrixXd& m) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("min_eigpair: matrix is not square");
  const double scale = m.cwiseAbs().maxCoeff();
  const double tol = 1e-12 * (scale > 0.0 ? scale : 1.0);
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < j; ++i)
      if (std::abs(m(i, j) - m(j, i)) > tol)
        throw std::invalid_argument("min_eigpair: matrix is not symmetric");
}

// dsyevr, smallest eigenvalue; eigenvector optional. Works in place on `a`.
double syevr_smallest(Eigen::MatrixXd& a, Eigen::VectorXd* vec) {
  const lapack_int n = static_cast<lapack_int>(a.rows());
  double w = 0.0;
  Eigen::VectorXd z;
  std::vector<lapack_int> isuppz(2);
  lapack_int m = 0;
  double* zptr = nullptr;
  if (vec) {
    z.resize(n);
    zptr = z.data();
  }
  const lapack_int info = LAPACKE_dsyevr(
      LAPACK_COL_MAJOR, vec ? 'V' : 'N', 'I', 'L', n, a.data(), n, 0.0, 0.0, 1,
      1, 0.0, &m, &w, zptr, n, isuppz.data());
  if (info != 0)
    throw std::runtime_error("min_eigpair: dsyevr failed, info = " +
                             std::to_string(info));
  if (m != 1)
    throw std::runtime_error("min_eigpair: dsyevr returned " +
                             std::to_string(m) + " eigenvalues, expected 1");
  if (vec) *vec = std::move(z);
  return w;
}

}  // namespace

double min_eigenvalue(Eigen::MatrixXd matrix) {
  require_symmetric(matrix);
  return syevr_smallest(matrix, nullptr);
}

EigenPair min_eigpair(const Eigen::MatrixXd& matrix) {
  require_symmetric(matrix);
  Eigen::MatrixXd work = matrix;
  Eigen::VectorXd v;
  const double value = syevr_smallest(work, &v);

  v.normalize();
  Eigen::Index imax = 0;
  v.cwiseAbs().maxCoeff(&imax);
  if (v(imax) < 0.0) v = -v;

  const double residual = (matrix.selfadjointView<Eigen::Lower>() * v - value * v).norm();
  return EigenPair{value, std::move(v), residual};
}

}  // namespace backflow
