#include "backflow/model.hpp"

#include <cmath>

namespace backflow {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;

// (l - beta)(l - beta + 1), the dimensionless squared-momentum factor of
// the constrained spectrum.
double momentum_factor(double beta, long l) {
  const double u = static_cast<double>(l) - beta;
  return u * (u + 1.0);
}
}  // namespace

double epsilon_formula(double chi, double beta, long l) {
  return std::sqrt(1.0 + chi * chi * momentum_factor(beta, l));
}

double norm_const_formula(double chi, double beta, long l) {
  const double u = static_cast<double>(l) - beta;
  const double eps = epsilon_formula(chi, beta, l);
  const double r = chi * u / (1.0 + eps);
  return 1.0 / std::sqrt(kTwoPi * (1.0 + r * r));
}

double epsilon(const RingParams& params, long l) {
  if (l < 0) throw std::invalid_argument("epsilon: l must be >= 0");
  return epsilon_formula(params.chi, params.beta, l);
}

double norm_const(const RingParams& params, long l) {
  if (l < 0) throw std::invalid_argument("norm_const: l must be >= 0");
  return norm_const_formula(params.chi, params.beta, l);
}

double eigenstate_flux(const RingParams& params, long l) {
  if (l < 0) throw std::invalid_argument("eigenstate_flux: l must be >= 0");
  const double a = norm_const(params, l);
  const double u = static_cast<double>(l) - params.beta;
  return 8.0 * params.alpha * a * a * u / (1.0 + epsilon(params, l));
}

ModeTable::ModeTable(const RingParams& params, long n_max)
    : params_(params), n_max_(n_max) {
  if (n_max < 0) throw std::invalid_argument("ModeTable: n_max must be >= 0");
  eps_.reserve(static_cast<std::size_t>(n_max) + 1);
  norm_.reserve(static_cast<std::size_t>(n_max) + 1);
  for (long l = 0; l <= n_max; ++l) {
    eps_.push_back(epsilon(params, l));
    norm_.push_back(norm_const(params, l));
  }
}

}  // namespace backflow
