#pragma once

#include <vector>

namespace backflow {

/// Discretization parameters for the line-limit integral eigenvalue problem.
/// eps is the single physical parameter sqrt(4 hbar / (T m c^2)); z_max and
/// n_nodes control the Nystrom quadrature.
struct LineParams {
  double eps;
  double z_max = 20.0;
  int n_nodes = 400;
};

/// gamma(z) = sqrt(1 + eps^2 z^2), the line limit of the dimensionless energy.
double gamma_of_z(double eps, double z);

/// Symmetric kernel of the line integral equation. The sinc argument is
/// stabilized as 2 (z^2 - z'^2) / (gamma(z) + gamma(z')).
double line_kernel(double eps, double z, double zp);

struct LineResult {
  double lambda_min;
  double z_max;
  int n_nodes;
  bool cutoff_warning;  // result moved by > 1e-3 when doubling z_max or n_nodes
};

/// Nystrom solve: Gauss-Legendre nodes on [0, z_max], symmetrized matrix
/// sqrt(w_i) k(z_i, z_j) sqrt(w_j), smallest eigenvalue. When
/// `check_sensitivity` is set the solve is repeated at doubled z_max and
/// doubled n_nodes and the warning flag records any drift > 1e-3.
LineResult line_min_eig(const LineParams& params, bool check_sensitivity = true);

struct LineLadderPoint {
  double z_max;
  int n_nodes;
  double lambda_min;
};

struct LineInfimum {
  double value;       // extrapolated to z_max -> infinity
  double ssr;         // residual of the 1/z_max fit
  std::vector<LineLadderPoint> ladder;
};

/// Domain-converged estimate: Nystrom solves on a ladder of growing z_max
/// with node count scaling as z_max^2 (the sinc oscillation frequency grows
/// linearly with the cutoff), extrapolated to 1/z_max = 0 with a quadratic
/// fit. The ladder convergence table is returned for inspection.
LineInfimum line_infimum(double eps, const std::vector<double>& z_ladder,
                         double nodes_per_z2 = 1.2, int min_nodes = 400);

}  // namespace backflow
