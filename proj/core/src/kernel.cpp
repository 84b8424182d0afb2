#include "backflow/kernel.hpp"

#include <cstdint>
#include <fstream>
#include <stdexcept>

#include "backflow/sinc.hpp"

namespace backflow {

namespace {
constexpr double kPi = 3.141592653589793238462643383279;

double momentum_factor(double beta, long l) {
  const double u = static_cast<double>(l) - beta;
  return u * (u + 1.0);
}
}  // namespace

FluxKernel build_kernel(const ModeTable& modes, long n_max) {
  if (n_max < 1) throw std::invalid_argument("build_kernel: n_max must be >= 1");
  if (modes.n_max() < n_max)
    throw std::invalid_argument("build_kernel: mode table too small");
  const RingParams& p = modes.params();
  const long n = n_max + 1;

  Eigen::MatrixXd entries(n, n);
  for (long l = 0; l < n; ++l) {
    const double ql = momentum_factor(p.beta, l);
    const double al = modes.norm(l);
    const double gl = modes.velocity_factor(l);
    for (long m = 0; m <= l; ++m) {
      const double qm = momentum_factor(p.beta, m);
      // 2*alpha*(eps_l - eps_m)/chi^2 without the catastrophic subtraction
      const double arg = 2.0 * p.alpha * (ql - qm) / (modes.eps(l) + modes.eps(m));
      const double v = (p.alpha / kPi) * 4.0 * kPi * al * modes.norm(m) *
                       (gl + modes.velocity_factor(m)) * sinc(arg);
      entries(l, m) = v;
      entries(m, l) = v;
    }
  }
  return FluxKernel{p, n_max, std::move(entries)};
}

FluxKernel build_kernel(const RingParams& params, long n_max) {
  return build_kernel(ModeTable(params, n_max), n_max);
}

namespace {
// Shared shape of the two nonrelativistic kernels: amplitude (l+l'-2b),
// phase alpha*(q_l - q_l') with q the squared-momentum profile.
template <typename Q>
FluxKernel nonrel_like(double alpha, double beta, long n_max, Q&& q) {
  if (n_max < 1) throw std::invalid_argument("nonrel kernel: n_max must be >= 1");
  if (!(alpha > 0.0)) throw std::invalid_argument("nonrel kernel: alpha must be > 0");
  const long n = n_max + 1;
  Eigen::MatrixXd entries(n, n);
  for (long l = 0; l < n; ++l) {
    for (long m = 0; m <= l; ++m) {
      const double amp = static_cast<double>(l + m) - 2.0 * beta;
      const double v = (alpha / kPi) * amp * sinc(alpha * (q(l) - q(m)));
      entries(l, m) = v;
      entries(m, l) = v;
    }
  }
  // chi has no meaning in the limit kernels; store a placeholder of 1.
  return FluxKernel{RingParams(1.0, beta, alpha), n_max, std::move(entries)};
}
}  // namespace

FluxKernel nonrel_kernel(double alpha, double beta, long n_max) {
  return nonrel_like(alpha, beta, n_max,
                     [beta](long l) { return momentum_factor(beta, l); });
}

FluxKernel spinless_ring_kernel(double alpha, double beta, long n_max) {
  return nonrel_like(alpha, beta, n_max, [beta](long l) {
    const double u = static_cast<double>(l) - beta;
    return u * u;
  });
}

void dump_kernel(const FluxKernel& kernel, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("dump_kernel: cannot open " + path);
  const double header[4] = {static_cast<double>(kernel.n_max), kernel.params.chi,
                            kernel.params.beta, kernel.params.alpha};
  out.write(reinterpret_cast<const char*>(header), sizeof(header));
  // Eigen stores column-major; the matrix is symmetric, so the raw buffer is
  // already the row-major image.
  out.write(reinterpret_cast<const char*>(kernel.entries.data()),
            static_cast<std::streamsize>(sizeof(double)) * kernel.entries.size());
}

}  // namespace backflow
