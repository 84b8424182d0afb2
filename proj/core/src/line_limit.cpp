#include "backflow/line_limit.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

#include "backflow/eig.hpp"
#include "backflow/sinc.hpp"

namespace backflow {

namespace {
constexpr double kPi = 3.141592653589793238462643383279;

// Gauss-Legendre nodes/weights on [-1, 1] by Newton iteration on P_n.
void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
  x.assign(static_cast<std::size_t>(n), 0.0);
  w.assign(static_cast<std::size_t>(n), 0.0);
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    double z = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p1 = 1.0, p2 = 0.0;
      for (int k = 0; k < n; ++k) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * k + 1.0) * z * p2 - k * p3) / (k + 1.0);
      }
      pp = n * (z * p1 - p2) / (z * z - 1.0);
      const double dz = p1 / pp;
      z -= dz;
      if (std::abs(dz) < 1e-15) break;
    }
    x[static_cast<std::size_t>(i)] = -z;
    x[static_cast<std::size_t>(n - 1 - i)] = z;
    const double wi = 2.0 / ((1.0 - z * z) * pp * pp);
    w[static_cast<std::size_t>(i)] = wi;
    w[static_cast<std::size_t>(n - 1 - i)] = wi;
  }
}

double nystrom_min_eig(double eps, double z_max, int n) {
  std::vector<double> xg, wg;
  gauss_legendre(n, xg, wg);

  std::vector<double> z(static_cast<std::size_t>(n)), sw(static_cast<std::size_t>(n)),
      g(static_cast<std::size_t>(n)), d(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const std::size_t ii = static_cast<std::size_t>(i);
    z[ii] = 0.5 * z_max * (xg[ii] + 1.0);
    sw[ii] = std::sqrt(0.5 * z_max * wg[ii]);
    g[ii] = gamma_of_z(eps, z[ii]);
    d[ii] = std::sqrt(g[ii] * (g[ii] + 1.0));
  }

  Eigen::MatrixXd mat(n, n);
  for (int i = 0; i < n; ++i) {
    const std::size_t ii = static_cast<std::size_t>(i);
    for (int j = 0; j <= i; ++j) {
      const std::size_t jj = static_cast<std::size_t>(j);
      const double num = z[ii] * (g[jj] + 1.0) + z[jj] * (g[ii] + 1.0);
      const double arg = 2.0 * (z[ii] * z[ii] - z[jj] * z[jj]) / (g[ii] + g[jj]);
      const double v = (1.0 / kPi) * num / (d[ii] * d[jj]) * sinc(arg) * sw[ii] * sw[jj];
      mat(i, j) = v;
      mat(j, i) = v;
    }
  }
  return min_eigenvalue(std::move(mat));
}

}  // namespace

double gamma_of_z(double eps, double z) {
  const double ez = eps * z;
  return std::sqrt(1.0 + ez * ez);
}

double line_kernel(double eps, double z, double zp) {
  const double g = gamma_of_z(eps, z);
  const double gp = gamma_of_z(eps, zp);
  const double num = z * (gp + 1.0) + zp * (g + 1.0);
  const double den = std::sqrt(g * (g + 1.0) * gp * (gp + 1.0));
  const double arg = 2.0 * (z * z - zp * zp) / (g + gp);
  return (1.0 / kPi) * num / den * sinc(arg);
}

LineResult line_min_eig(const LineParams& params, bool check_sensitivity) {
  if (!(params.eps > 0.0)) throw std::invalid_argument("line_min_eig: eps must be > 0");
  if (!(params.z_max > 0.0)) throw std::invalid_argument("line_min_eig: z_max must be > 0");
  if (params.n_nodes < 50) throw std::invalid_argument("line_min_eig: need n_nodes >= 50");

  const double lam = nystrom_min_eig(params.eps, params.z_max, params.n_nodes);
  bool warn = false;
  if (check_sensitivity) {
    const double lam_z = nystrom_min_eig(params.eps, 2.0 * params.z_max, params.n_nodes);
    const double lam_n = nystrom_min_eig(params.eps, params.z_max, 2 * params.n_nodes);
    warn = std::abs(lam_z - lam) > 1e-3 || std::abs(lam_n - lam) > 1e-3;
  }
  return LineResult{lam, params.z_max, params.n_nodes, warn};
}

LineInfimum line_infimum(double eps, const std::vector<double>& z_ladder,
                         double nodes_per_z2, int min_nodes) {
  if (z_ladder.size() < 3)
    throw std::invalid_argument("line_infimum: need at least 3 ladder points");

  LineInfimum result;
  for (double z_max : z_ladder) {
    const int n = std::max(min_nodes,
                           static_cast<int>(std::ceil(nodes_per_z2 * z_max * z_max)));
    result.ladder.push_back(
        LineLadderPoint{z_max, n, nystrom_min_eig(eps, z_max, n)});
  }

  // Quadratic fit in 1/z_max, value at 0. Same scheme as the ring's 1/N
  // extrapolation; the cutoff error of the truncated operator decays ~ 1/z.
  const Eigen::Index rows = static_cast<Eigen::Index>(result.ladder.size());
  Eigen::MatrixXd design(rows, 3);
  Eigen::VectorXd rhs(rows);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const auto& pt = result.ladder[static_cast<std::size_t>(i)];
    const double x = 1.0 / pt.z_max;
    design(i, 0) = 1.0;
    design(i, 1) = x;
    design(i, 2) = x * x;
    rhs(i) = pt.lambda_min;
  }
  const Eigen::Vector3d coeffs = design.colPivHouseholderQr().solve(rhs);
  result.value = coeffs(0);
  result.ssr = (design * coeffs - rhs).squaredNorm();
  return result;
}

}  // namespace backflow
