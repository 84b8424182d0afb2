#pragma once

#include <cmath>

namespace backflow {

/// Unnormalized sinc: sin(x)/x with the removable singularity filled in.
/// Below the threshold the Taylor expansion 1 - x^2/6 + x^4/120 is exact
/// to double precision.
inline double sinc(double x) {
  const double ax = std::abs(x);
  if (ax < 1e-4) {
    const double x2 = x * x;
    return 1.0 - x2 / 6.0 + x2 * x2 / 120.0;
  }
  return std::sin(x) / x;
}

}  // namespace backflow
