#pragma once

#include <Eigen/Dense>
#include <string>

#include "backflow/model.hpp"

namespace backflow {

/// Dense real symmetric flux kernel K_{l,l'}. The quadratic form c^T K c is
/// the probability that flows through phi = 0 during the window [-T/2, T/2]
/// for a superposition with real coefficients c_l.
struct FluxKernel {
  RingParams params;
  long n_max;
  Eigen::MatrixXd entries;  // (n_max+1) x (n_max+1), symmetric
};

/// Build the relativistic flux kernel for modes l = 0..n_max.
///
/// The sinc argument is evaluated through the cancellation-free identity
///   2*alpha*(eps_l - eps_l')/chi^2
///     = 2*alpha*[(l-b)(l-b+1) - (l'-b)(l'-b+1)] / (eps_l + eps_l'),
/// which stays accurate for small chi where the direct difference of the
/// eps values loses all significant digits.
FluxKernel build_kernel(const RingParams& params, long n_max);

/// Same, reusing an existing mode table (must extend to at least n_max).
FluxKernel build_kernel(const ModeTable& modes, long n_max);

/// chi -> 0 limit of the relativistic kernel. The phase carries the
/// (l-b)(l-b+1) spectrum of the constrained Dirac operator; this is the
/// elementwise limit oracle for build_kernel.
FluxKernel nonrel_kernel(double alpha, double beta, long n_max);

/// Flux kernel of the nonrelativistic spinless particle on a ring, with
/// (l-b)^2 phases. Distinct from nonrel_kernel: the spin of the Dirac
/// fermion shifts the limiting phases by half a quantum. Its extremal
/// eigenvalue over alpha at beta = 0 is the spinless ring backflow
/// constant 0.116816.
FluxKernel spinless_ring_kernel(double alpha, double beta, long n_max);

/// Debug dump: small header (n_max, chi, beta, alpha as doubles) followed by
/// the row-major matrix. Not a stability-guaranteed format.
void dump_kernel(const FluxKernel& kernel, const std::string& path);

}  // namespace backflow
