#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "backflow/extrapolate.hpp"
#include "backflow/model.hpp"

namespace backflow {

/// Truncation schedules for the N -> infinity extrapolation.
namespace schedules {
inline const std::vector<long> kAccurate = {500, 700, 1000, 1400, 2000};
inline const std::vector<long> kFast = {200, 300, 450, 700, 1000};
std::vector<long> by_name(const std::string& profile);
}  // namespace schedules

/// Extrapolated backflow infimum at fixed parameters, plus the
/// backflow-maximizing coefficients at the largest computed truncation.
struct ExtremalResult {
  RingParams params;
  double p_value;                  // extrapolated infimum
  Eigen::VectorXd best_vector;     // eigenvector at the largest N
  ExtrapolationResult extrapolation;
};

/// Truncate the eigenproblem at each N of the schedule, take the smallest
/// eigenvalue, and extrapolate to 1/N = 0. The eigenvector is kept from the
/// largest N only.
ExtremalResult backflow_infimum(const RingParams& params,
                                const std::vector<long>& schedule,
                                bool want_vector = true);

struct ScanPoint {
  double alpha_over_pi;
  double beta;
  double chi;
  double p_value;
  bool ok;
  std::string error;  // empty when ok
};

/// One backflow_infimum per alpha grid point. Per-point failures are
/// recorded and the scan continues. Points are independent jobs; `workers`
/// bounds the thread count (<= 0 means hardware concurrency). Results are
/// merged by grid index, so the output does not depend on the worker count.
std::vector<ScanPoint> scan_alpha(double chi, double beta,
                                  const std::vector<double>& alpha_over_pi_grid,
                                  const std::vector<long>& schedule,
                                  int workers = 0);

/// Minimum of the extrapolated infimum over alpha at fixed (chi, beta):
/// coarse grid on alpha/pi over (0, alpha_over_pi_max], then golden-section
/// refinement of the extrapolated objective.
struct AlphaMinimum {
  double alpha_over_pi;
  double p_value;
};
AlphaMinimum alpha_minimum(double chi, double beta,
                           const std::vector<long>& schedule,
                           double alpha_over_pi_max = 1.5,
                           double coarse_step = 0.01);

struct GlobalMinimum {
  double chi;
  double alpha_over_pi;
  double beta;
  double p_value;
  std::vector<ScanPoint> chi_profile;  // p(chi) at optimized alpha, beta = 0
};

/// Minimize over (chi, alpha) at beta = 0, then confirm beta = 0 on a coarse
/// beta grid. The chi grid is refined to step 0.005 around the coarse
/// minimizer; the refined points use the supplied schedule.
GlobalMinimum global_minimum(const std::vector<double>& chi_grid,
                             const std::vector<long>& schedule);

struct MasslessEntry {
  double chi;
  double alpha_over_pi;
  double p_value;
};

/// Per-chi optimized infimum over alpha at beta = 0 for large chi. The
/// alpha search window scales with chi (the optimum sits at alpha ~ chi).
std::vector<MasslessEntry> massless_estimates(const std::vector<double>& chi_values,
                                              const std::vector<long>& schedule);

}  // namespace backflow
