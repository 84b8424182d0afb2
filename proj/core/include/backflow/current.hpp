#pragma once

#include <Eigen/Dense>
#include <vector>

#include "backflow/extremal.hpp"
#include "backflow/model.hpp"

namespace backflow {

/// Sampled probability current J_Psi(0, t) * T of a superposition state over
/// a time grid (t in units of the window length T).
struct CurrentTrace {
  std::vector<double> t_over_T;
  std::vector<double> j_times_T;
};

/// Evaluate the current of the state with real coefficients `coeffs` (one per
/// mode of `modes`). The double sum over modes is folded into two length-N
/// accumulations per time point; the symmetrized form is exactly real. Phase
/// differences are computed cancellation-free, so small chi is safe.
/// Grid points must lie within [-0.6, 0.6].
CurrentTrace current_trace(const ModeTable& modes, const Eigen::VectorXd& coeffs,
                           const std::vector<double>& grid);

/// Convenience overload for the maximizing state of an ExtremalResult.
CurrentTrace current_trace(const ExtremalResult& result,
                           const std::vector<double>& grid);

/// Trapezoidal integral of the trace over t/T in [-1/2, 1/2]. Requires the
/// grid to cover the window with at least 200 points. Matches the quadratic
/// form c^T K c of the source state within quadrature error.
double window_integral(const CurrentTrace& trace);

/// Uniform grid helper (n points on [lo, hi]).
std::vector<double> uniform_grid(double lo, double hi, int n);

}  // namespace backflow
