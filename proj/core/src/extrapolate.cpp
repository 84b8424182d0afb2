#include "backflow/extrapolate.hpp"

#include <Eigen/Dense>
#include <set>
#include <stdexcept>

namespace backflow {

ExtrapolationResult quad_extrapolate(
    const std::vector<std::pair<long, double>>& samples) {
  if (samples.size() < 4)
    throw std::invalid_argument("quad_extrapolate: need at least 4 samples");
  std::set<long> seen;
  for (const auto& [n, v] : samples) {
    if (n < 50) throw std::invalid_argument("quad_extrapolate: all N must be >= 50");
    if (!seen.insert(n).second)
      throw std::invalid_argument("quad_extrapolate: duplicate N values");
  }

  const Eigen::Index rows = static_cast<Eigen::Index>(samples.size());
  Eigen::MatrixXd design(rows, 3);
  Eigen::VectorXd rhs(rows);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const double x = 1.0 / static_cast<double>(samples[static_cast<std::size_t>(i)].first);
    design(i, 0) = 1.0;
    design(i, 1) = x;
    design(i, 2) = x * x;
    rhs(i) = samples[static_cast<std::size_t>(i)].second;
  }

  // Householder QR keeps the normal equations out of the picture; the
  // basis is mildly conditioned anyway since x <= 0.02.
  const Eigen::Vector3d coeffs = design.colPivHouseholderQr().solve(rhs);
  const double ssr = (design * coeffs - rhs).squaredNorm();

  ExtrapolationResult result;
  result.value_at_zero = coeffs(0);
  result.coeffs = {coeffs(0), coeffs(1), coeffs(2)};
  result.ssr = ssr;
  result.points = samples;
  result.poor_fit = ssr > kFitWarnThreshold;
  return result;
}

}  // namespace backflow
