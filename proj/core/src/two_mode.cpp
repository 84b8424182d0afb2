#include "backflow/two_mode.hpp"

#include <cmath>
#include <stdexcept>

#include "backflow/golden.hpp"
#include "backflow/sinc.hpp"

namespace backflow {

namespace {
constexpr double kPi = 3.141592653589793238462643383279;
constexpr double kTwoPi = 2.0 * kPi;
}  // namespace

TwoModeCoeffs two_mode_coeffs(const RingParams& params, long l1, long l2) {
  if (l1 < 0 || l1 >= l2)
    throw std::invalid_argument("two_mode_coeffs: need 0 <= l1 < l2");
  const double a1 = norm_const(params, l1);
  const double a2 = norm_const(params, l2);
  const double e1 = epsilon(params, l1);
  const double e2 = epsilon(params, l2);
  const double g1 = (static_cast<double>(l1) - params.beta) / (1.0 + e1);
  const double g2 = (static_cast<double>(l2) - params.beta) / (1.0 + e2);

  const double u1 = static_cast<double>(l1) - params.beta;
  const double u2 = static_cast<double>(l2) - params.beta;
  const double q1 = u1 * (u1 + 1.0);
  const double q2 = u2 * (u2 + 1.0);

  TwoModeCoeffs c;
  c.A = 4.0 * kPi * (a2 * a2 * g2 + a1 * a1 * g1);
  c.B = 4.0 * kPi * (a2 * a2 * g2 - a1 * a1 * g1);
  c.C = 4.0 * kPi * a1 * a2 * (g2 + g1);
  c.D = 2.0 * params.alpha * (q2 - q1) / (e2 + e1);
  c.l1 = l1;
  c.l2 = l2;
  return c;
}

double two_mode_prob(const RingParams& params, long l1, long l2, double phi,
                     double gamma_phase) {
  if (!(phi >= 0.0 && phi <= kPi))
    throw std::invalid_argument("two_mode_prob: phi must lie in [0, pi]");
  if (!(gamma_phase >= 0.0 && gamma_phase < kTwoPi))
    throw std::invalid_argument("two_mode_prob: gamma must lie in [0, 2 pi)");
  const TwoModeCoeffs c = two_mode_coeffs(params, l1, l2);
  return (params.alpha / kPi) *
         (c.A - c.B * std::cos(phi) +
          c.C * sinc(c.D) * std::cos(gamma_phase) * std::sin(phi));
}

double two_mode_min(const RingParams& params, long l1, long l2) {
  const TwoModeCoeffs c = two_mode_coeffs(params, l1, l2);
  const double s = sinc(c.D);
  return (params.alpha / kPi) * (c.A - std::sqrt(c.B * c.B + c.C * c.C * s * s));
}

TwoModeScanPoint two_mode_alpha_minimum(double chi, double beta, long l1, long l2) {
  const auto objective = [&](double alpha_over_pi) {
    return two_mode_min(RingParams(chi, beta, kPi * alpha_over_pi), l1, l2);
  };
  std::vector<double> grid;
  for (double a = 0.005; a <= 1.0 + 1e-12; a += 0.005) grid.push_back(a);
  const auto [x, fx] = grid_then_golden(objective, grid, 1e-9);
  return TwoModeScanPoint{x, fx};
}

}  // namespace backflow
