#pragma once

#include <stdexcept>
#include <vector>

namespace backflow {

/// Dimensionless model parameters for the Dirac fermion on a ring.
///
/// chi   = lambda_C / R, ratio of the reduced Compton wavelength to the
///         ring radius (how relativistic the constrained dynamics is)
/// beta  = magnetic flux through the ring in units of the flux quantum,
///         reduced to the fundamental domain (-1, 0]
/// alpha = hbar * T / (4 m R^2), dimensionless observation-window length
struct RingParams {
  double chi;
  double beta;
  double alpha;

  RingParams(double chi_, double beta_, double alpha_)
      : chi(chi_), beta(beta_), alpha(alpha_) {
    if (!(chi > 0.0)) throw std::invalid_argument("RingParams: chi must be > 0");
    if (!(alpha > 0.0)) throw std::invalid_argument("RingParams: alpha must be > 0");
    if (!(beta > -1.0 && beta <= 0.0))
      throw std::invalid_argument("RingParams: beta must lie in (-1, 0]");
  }
};

/// Formula-level evaluators, valid for any real beta and any integer l
/// (including the mirrored index -l-1 of the degenerate partner). The
/// RingParams overloads below restrict to the fundamental domain.
double epsilon_formula(double chi, double beta, long l);
double norm_const_formula(double chi, double beta, long l);

/// Dimensionless energy eps_l = E_l / (m c^2) of mode l (positive branch).
double epsilon(const RingParams& params, long l);

/// Dimensionless normalization constant A_l, including the 1/sqrt(2 pi)
/// factor. Tends to 1/sqrt(2 pi) in the nonrelativistic limit chi -> 0.
double norm_const(const RingParams& params, long l);

/// Time-integrated flux J_l * T of the single eigenstate l through phi = 0.
/// Non-negative for l >= 0 and beta in (-1, 0].
double eigenstate_flux(const RingParams& params, long l);

/// Precomputed eps_l and A_l for l = 0..n_max, shared by the kernel and
/// current modules. Immutable after construction.
class ModeTable {
 public:
  ModeTable(const RingParams& params, long n_max);

  const RingParams& params() const { return params_; }
  long n_max() const { return n_max_; }
  double eps(long l) const { return eps_[static_cast<std::size_t>(l)]; }
  double norm(long l) const { return norm_[static_cast<std::size_t>(l)]; }

  /// (l - beta) / (1 + eps_l), the per-mode velocity factor of the kernel.
  double velocity_factor(long l) const {
    return (static_cast<double>(l) - params_.beta) / (1.0 + eps(l));
  }

 private:
  RingParams params_;
  long n_max_;
  std::vector<double> eps_;
  std::vector<double> norm_;
};

}  // namespace backflow
