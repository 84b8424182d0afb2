#include "backflow/current.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace backflow {

namespace {
constexpr double kGridLimit = 0.6 + 1e-12;
}

CurrentTrace current_trace(const ModeTable& modes, const Eigen::VectorXd& coeffs,
                           const std::vector<double>& grid) {
  const long n = static_cast<long>(coeffs.size()) - 1;
  if (n < 0 || n > modes.n_max())
    throw std::invalid_argument("current_trace: coefficient count does not fit mode table");
  for (double t : grid)
    if (std::abs(t) > kGridLimit)
      throw std::invalid_argument("current_trace: grid point outside [-0.6, 0.6]");

  const RingParams& p = modes.params();
  const double alpha = p.alpha;

  // Per-mode amplitudes and phase frequencies relative to mode 0. Only
  // frequency differences enter, and (eps_l - eps_0)/chi^2 is evaluated
  // through the conjugate form, so small chi costs no precision.
  std::vector<double> amp(static_cast<std::size_t>(n) + 1);
  std::vector<double> vel(static_cast<std::size_t>(n) + 1);
  std::vector<double> omega(static_cast<std::size_t>(n) + 1);
  const double beta = p.beta;
  const double q0 = -beta * (1.0 - beta);
  const double eps0 = modes.eps(0);
  for (long l = 0; l <= n; ++l) {
    const std::size_t i = static_cast<std::size_t>(l);
    amp[i] = modes.norm(l) * coeffs(l);
    vel[i] = modes.velocity_factor(l);
    const double u = static_cast<double>(l) - beta;
    const double ql = u * (u + 1.0);
    omega[i] = 4.0 * alpha * (ql - q0) / (modes.eps(l) + eps0);
  }

  CurrentTrace trace;
  trace.t_over_T = grid;
  trace.j_times_T.resize(grid.size());
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const double tau = grid[k];
    // The double sum factorizes: sum_{l,l'} a_l a_l' (v_l + v_l')
    // cos((w_l - w_l') tau) = 2 Re(S1 * conj(S0)).
    std::complex<double> s0{0.0, 0.0}, s1{0.0, 0.0};
    for (std::size_t i = 0; i < amp.size(); ++i) {
      const std::complex<double> ph = std::polar(amp[i], omega[i] * tau);
      s0 += ph;
      s1 += vel[i] * ph;
    }
    trace.j_times_T[k] = 8.0 * alpha * std::real(s1 * std::conj(s0));
  }
  return trace;
}

CurrentTrace current_trace(const ExtremalResult& result,
                           const std::vector<double>& grid) {
  const long n = static_cast<long>(result.best_vector.size()) - 1;
  if (n < 0)
    throw std::invalid_argument("current_trace: result carries no eigenvector");
  return current_trace(ModeTable(result.params, n), result.best_vector, grid);
}

double window_integral(const CurrentTrace& trace) {
  // Clip the trace to [-1/2, 1/2], interpolating the endpoints if the grid
  // extends past them.
  std::vector<double> t, j;
  const auto& ts = trace.t_over_T;
  const auto& js = trace.j_times_T;
  if (ts.size() != js.size() || ts.size() < 2)
    throw std::invalid_argument("window_integral: malformed trace");

  const auto interp = [&](double x) {
    for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
      if ((ts[i] <= x && x <= ts[i + 1])) {
        const double f = (x - ts[i]) / (ts[i + 1] - ts[i]);
        return js[i] + f * (js[i + 1] - js[i]);
      }
    }
    throw std::invalid_argument("window_integral: grid does not cover [-1/2, 1/2]");
  };

  if (ts.front() > -0.5 || ts.back() < 0.5)
    throw std::invalid_argument("window_integral: grid does not cover [-1/2, 1/2]");

  t.push_back(-0.5);
  j.push_back(interp(-0.5));
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (ts[i] > -0.5 && ts[i] < 0.5) {
      t.push_back(ts[i]);
      j.push_back(js[i]);
    }
  }
  t.push_back(0.5);
  j.push_back(interp(0.5));

  if (t.size() < 200)
    throw std::invalid_argument("window_integral: need >= 200 grid points in the window");

  double sum = 0.0;
  for (std::size_t i = 0; i + 1 < t.size(); ++i)
    sum += 0.5 * (j[i] + j[i + 1]) * (t[i + 1] - t[i]);
  return sum;
}

std::vector<double> uniform_grid(double lo, double hi, int n) {
  if (n < 2) throw std::invalid_argument("uniform_grid: need n >= 2");
  std::vector<double> g(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    g[static_cast<std::size_t>(i)] = lo + (hi - lo) * static_cast<double>(i) / (n - 1);
  return g;
}

}  // namespace backflow
