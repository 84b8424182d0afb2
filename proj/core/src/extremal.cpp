#include "backflow/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <atomic>
#include <thread>

#include "backflow/eig.hpp"
#include "backflow/golden.hpp"
#include "backflow/kernel.hpp"

namespace backflow {

namespace {
constexpr double kPi = 3.141592653589793238462643383279;

// Smallest eigenvalue of the truncated kernel, reusing a shared mode table.
double lambda_min_at(const ModeTable& modes, long n) {
  return min_eigenvalue(build_kernel(modes, n).entries);
}

// Single-truncation objective used inside the alpha searches. The argmin of
// lambda_min^(N)(alpha) at moderate N is well within the refinement
// tolerance of the extrapolated argmin.
double lambda_min_single(double chi, double beta, double alpha, long n) {
  return min_eigenvalue(build_kernel(RingParams(chi, beta, alpha), n).entries);
}
}  // namespace

namespace schedules {
std::vector<long> by_name(const std::string& profile) {
  if (profile == "accurate") return kAccurate;
  if (profile == "fast") return kFast;
  throw std::invalid_argument("unknown profile: " + profile);
}
}  // namespace schedules

ExtremalResult backflow_infimum(const RingParams& params,
                                const std::vector<long>& schedule,
                                bool want_vector) {
  if (schedule.empty())
    throw std::invalid_argument("backflow_infimum: empty schedule");
  std::vector<long> ns = schedule;
  std::sort(ns.begin(), ns.end());

  const long n_top = ns.back();
  ModeTable modes(params, n_top);

  std::vector<std::pair<long, double>> samples;
  samples.reserve(ns.size());
  for (long n : ns) samples.emplace_back(n, lambda_min_at(modes, n));

  ExtrapolationResult fit = quad_extrapolate(samples);
  Eigen::VectorXd vec;
  long n_vec = n_top;
  if (fit.poor_fit) {
    // One escalation step: add a sample ~40% beyond the largest N.
    const long n_extra = static_cast<long>(std::lround(1.4 * static_cast<double>(n_top)));
    ModeTable bigger(params, n_extra);
    samples.emplace_back(n_extra, lambda_min_at(bigger, n_extra));
    fit = quad_extrapolate(samples);
    if (want_vector) {
      vec = min_eigpair(build_kernel(bigger, n_extra).entries).vector;
      n_vec = n_extra;
    }
  }
  if (want_vector && vec.size() == 0)
    vec = min_eigpair(build_kernel(modes, n_top).entries).vector;
  (void)n_vec;

  return ExtremalResult{params, fit.value_at_zero, std::move(vec), std::move(fit)};
}

std::vector<ScanPoint> scan_alpha(double chi, double beta,
                                  const std::vector<double>& alpha_over_pi_grid,
                                  const std::vector<long>& schedule,
                                  int workers) {
  if (alpha_over_pi_grid.empty())
    throw std::invalid_argument("scan_alpha: empty grid");
  std::vector<ScanPoint> points(alpha_over_pi_grid.size());

  const auto run_point = [&](std::size_t i) {
    const double aop = alpha_over_pi_grid[i];
    ScanPoint& pt = points[i];
    pt.alpha_over_pi = aop;
    pt.beta = beta;
    pt.chi = chi;
    try {
      const ExtremalResult r =
          backflow_infimum(RingParams(chi, beta, kPi * aop), schedule, false);
      pt.p_value = r.p_value;
      pt.ok = true;
    } catch (const std::exception& e) {
      pt.ok = false;
      pt.error = e.what();
      pt.p_value = std::nan("");
    }
  };

  unsigned n_workers = workers > 0 ? static_cast<unsigned>(workers)
                                   : std::max(1u, std::thread::hardware_concurrency());
  n_workers = std::min<unsigned>(n_workers, static_cast<unsigned>(points.size()));
  if (n_workers <= 1) {
    for (std::size_t i = 0; i < points.size(); ++i) run_point(i);
  } else {
    std::vector<std::thread> pool;
    std::atomic<std::size_t> next{0};
    for (unsigned w = 0; w < n_workers; ++w)
      pool.emplace_back([&] {
        for (std::size_t i = next.fetch_add(1); i < points.size();
             i = next.fetch_add(1))
          run_point(i);
      });
    for (auto& t : pool) t.join();
  }
  return points;
}

AlphaMinimum alpha_minimum(double chi, double beta,
                           const std::vector<long>& schedule,
                           double alpha_over_pi_max, double coarse_step) {
  // Locate the basin on a cheap single-truncation objective, refine with
  // golden section at a moderate N, then price the argmin by extrapolation.
  std::vector<double> grid;
  for (double a = coarse_step; a <= alpha_over_pi_max + 1e-12; a += coarse_step)
    grid.push_back(a);

  std::size_t best = 0;
  double fbest = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double f = lambda_min_single(chi, beta, kPi * grid[i], 250);
    if (i == 0 || f < fbest) {
      fbest = f;
      best = i;
    }
  }
  const double lo = best == 0 ? grid[0] * 0.5 : grid[best - 1];
  const double hi = best + 1 == grid.size() ? grid[best] : grid[best + 1];
  const auto [aop, unused] = golden_minimize(
      [&](double a) { return lambda_min_single(chi, beta, kPi * a, 700); }, lo,
      hi, 1e-4);
  (void)unused;

  const ExtremalResult r =
      backflow_infimum(RingParams(chi, beta, kPi * aop), schedule, false);
  return AlphaMinimum{aop, r.p_value};
}

GlobalMinimum global_minimum(const std::vector<double>& chi_grid,
                             const std::vector<long>& schedule) {
  if (chi_grid.empty())
    throw std::invalid_argument("global_minimum: empty chi grid");

  // Coarse pass over the chi grid with the fast schedule.
  std::vector<ScanPoint> profile;
  profile.reserve(chi_grid.size());
  std::size_t best = 0;
  for (std::size_t i = 0; i < chi_grid.size(); ++i) {
    const AlphaMinimum am = alpha_minimum(chi_grid[i], 0.0, schedules::kFast);
    profile.push_back(
        ScanPoint{am.alpha_over_pi, 0.0, chi_grid[i], am.p_value, true, {}});
    if (am.p_value < profile[best].p_value) best = i;
  }

  // Refine chi with step 0.005 around the coarse minimizer, pricing each
  // candidate with the supplied schedule.
  const double chi0 = chi_grid[best];
  double lo = chi0 - 0.025, hi = chi0 + 0.025;
  if (best > 0) lo = std::max(lo, chi_grid[best - 1]);
  if (best + 1 < chi_grid.size()) hi = std::min(hi, chi_grid[best + 1]);

  GlobalMinimum result;
  result.beta = 0.0;
  result.p_value = 0.0;
  bool first = true;
  for (double chi = lo; chi <= hi + 1e-12; chi += 0.005) {
    const AlphaMinimum am = alpha_minimum(chi, 0.0, schedule);
    if (first || am.p_value < result.p_value) {
      result.chi = chi;
      result.alpha_over_pi = am.alpha_over_pi;
      result.p_value = am.p_value;
      first = false;
    }
  }

  // Confirm beta = 0 on a coarse grid. Candidates are screened with the fast
  // schedule and only accepted after re-pricing with the supplied one, so a
  // shallower fast extrapolant cannot displace the beta = 0 optimum.
  for (int k = 9; k >= 1; --k) {
    const double b = -0.1 * static_cast<double>(k);
    const AlphaMinimum screen = alpha_minimum(result.chi, b, schedules::kFast);
    if (screen.p_value < result.p_value - 1e-6) {
      const AlphaMinimum am = alpha_minimum(result.chi, b, schedule);
      if (am.p_value < result.p_value - 1e-6) {
        result.beta = b;
        result.alpha_over_pi = am.alpha_over_pi;
        result.p_value = am.p_value;
      }
    }
  }

  result.chi_profile = std::move(profile);
  return result;
}

std::vector<MasslessEntry> massless_estimates(const std::vector<double>& chi_values,
                                              const std::vector<long>& schedule) {
  std::vector<MasslessEntry> table;
  table.reserve(chi_values.size());
  for (double chi : chi_values) {
    // In the massless regime the optimum sits at alpha ~ chi, so the search
    // runs over the scaled variable alpha/(pi chi).
    std::vector<double> grid;
    for (double s = 0.02; s <= 1.0 + 1e-12; s += 0.02) grid.push_back(s);
    std::size_t best = 0;
    double fbest = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const double f = lambda_min_single(chi, 0.0, kPi * grid[i] * chi, 300);
      if (i == 0 || f < fbest) {
        fbest = f;
        best = i;
      }
    }
    const double lo = best == 0 ? grid[0] * 0.5 : grid[best - 1];
    const double hi = best + 1 == grid.size() ? grid[best] : grid[best + 1];
    const auto [s_opt, unused] = golden_minimize(
        [&](double s) { return lambda_min_single(chi, 0.0, kPi * s * chi, 700); },
        lo, hi, 1e-6);
    (void)unused;
    const ExtremalResult r = backflow_infimum(
        RingParams(chi, 0.0, kPi * s_opt * chi), schedule, false);
    table.push_back(MasslessEntry{chi, s_opt * chi, r.p_value});
  }
  return table;
}

}  // namespace backflow
