#pragma once

#include <cmath>
#include <functional>
#include <utility>
#include <vector>

namespace backflow {

/// Golden-section minimization of a unimodal function on [a, b].
/// Returns (x_min, f(x_min)); stops when the bracket is below x_tol.
inline std::pair<double, double> golden_minimize(
    const std::function<double(double)>& f, double a, double b,
    double x_tol = 1e-6, int max_iter = 200) {
  const double inv_gr = (std::sqrt(5.0) - 1.0) / 2.0;  // 1/phi
  double c = b - inv_gr * (b - a);
  double d = a + inv_gr * (b - a);
  double fc = f(c);
  double fd = f(d);
  for (int i = 0; i < max_iter && (b - a) > x_tol; ++i) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_gr * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_gr * (b - a);
      fd = f(d);
    }
  }
  return fc < fd ? std::make_pair(c, fc) : std::make_pair(d, fd);
}

/// Evaluate f on a grid, then refine around the best grid point with
/// golden-section search. The refinement bracket is one grid step on
/// either side of the coarse minimizer.
inline std::pair<double, double> grid_then_golden(
    const std::function<double(double)>& f, const std::vector<double>& grid,
    double x_tol = 1e-6) {
  std::size_t best = 0;
  double fbest = f(grid[0]);
  for (std::size_t i = 1; i < grid.size(); ++i) {
    const double fi = f(grid[i]);
    if (fi < fbest) {
      fbest = fi;
      best = i;
    }
  }
  const double lo = best == 0 ? grid[0] : grid[best - 1];
  const double hi = best + 1 == grid.size() ? grid[best] : grid[best + 1];
  return golden_minimize(f, lo, hi, x_tol);
}

}  // namespace backflow
