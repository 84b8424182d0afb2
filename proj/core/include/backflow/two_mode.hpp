#pragma once

#include "backflow/model.hpp"

namespace backflow {

/// Closed-form coefficients of the two-mode backflow probability
///   P(phi, gamma) = (alpha/pi) [A - B cos(phi) + C sinc(D) cos(gamma) sin(phi)].
struct TwoModeCoeffs {
  double A;
  double B;
  double C;
  double D;
  long l1;
  long l2;
};

/// Coefficients for the superposition of eigenstates l1 < l2. D uses the
/// cancellation-free phase of the kernel module.
TwoModeCoeffs two_mode_coeffs(const RingParams& params, long l1, long l2);

/// Integrated flux of the two-mode state parameterized by the mixing angle
/// phi in [0, pi] and relative phase gamma in [0, 2 pi). Angles outside the
/// ranges are rejected, not wrapped.
double two_mode_prob(const RingParams& params, long l1, long l2, double phi,
                     double gamma_phase);

/// Minimum of two_mode_prob over (phi, gamma):
///   (alpha/pi) (A - sqrt(B^2 + C^2 sinc^2(D))).
/// Equals the smallest eigenvalue of the 2x2 kernel block {l1, l2}.
double two_mode_min(const RingParams& params, long l1, long l2);

struct TwoModeScanPoint {
  double alpha_over_pi;
  double p_min;
};

/// Minimize two_mode_min over alpha: coarse grid (step alpha/pi = 0.005 over
/// (0, 1]) followed by golden-section refinement.
TwoModeScanPoint two_mode_alpha_minimum(double chi, double beta, long l1, long l2);

}  // namespace backflow
