#pragma once

#include <array>
#include <utility>
#include <vector>

namespace backflow {

/// Quadratic-in-1/N least-squares fit of truncated minimum eigenvalues,
/// evaluated at 1/N = 0.
struct ExtrapolationResult {
  double value_at_zero;            // constant coefficient of the fit
  std::array<double, 3> coeffs;    // c0 + c1*x + c2*x^2, x = 1/N
  double ssr;                      // sum of squared residuals
  std::vector<std::pair<long, double>> points;
  bool poor_fit;                   // ssr above the warning threshold
};

inline constexpr double kFitWarnThreshold = 1e-8;

/// Fit lambda_min against 1/N. Requires >= 4 samples with distinct N >= 50.
/// A poor fit (ssr > 1e-8) is flagged, not fatal.
ExtrapolationResult quad_extrapolate(
    const std::vector<std::pair<long, double>>& samples);

}  // namespace backflow
