#include <doctest.h>

#include <cmath>

#include "backflow/eig.hpp"
#include "backflow/extremal.hpp"
#include "backflow/kernel.hpp"

using namespace backflow;

namespace {
const RingParams kHeadline(0.73, 0.0, M_PI * 0.36252);
}

TEST_CASE("schedule lookup") {
  CHECK(schedules::by_name("accurate") == schedules::kAccurate);
  CHECK(schedules::by_name("fast") == schedules::kFast);
  CHECK_THROWS_AS(schedules::by_name("turbo"), std::invalid_argument);
}

TEST_CASE("frozen truncated eigenvalues at the headline parameters") {
  CHECK(min_eigenvalue(build_kernel(kHeadline, 300).entries) ==
        doctest::Approx(-0.09183245019408197).epsilon(1e-10));
  CHECK(min_eigenvalue(build_kernel(kHeadline, 500).entries) ==
        doctest::Approx(-0.09189731401206305).epsilon(1e-10));
}

TEST_CASE("truncated minima are non-increasing in N") {
  // Cauchy interlacing: a larger principal block can only deepen the minimum.
  const ModeTable modes(kHeadline, 400);
  double prev = 0.0;
  bool first = true;
  for (long n : {100L, 150L, 220L, 300L, 400L}) {
    const double lam = min_eigenvalue(build_kernel(modes, n).entries);
    if (!first) CHECK(lam <= prev + 1e-15);
    prev = lam;
    first = false;
  }
}

TEST_CASE("fast-schedule infimum reproduces the frozen extrapolant") {
  const ExtremalResult r = backflow_infimum(kHeadline, schedules::kFast);
  CHECK(r.p_value == doctest::Approx(-0.09197979).epsilon(2e-6));
  CHECK_FALSE(r.extrapolation.poor_fit);
  CHECK(r.extrapolation.points.size() == 5);
  // eigenvector from the largest truncation, normalized, dominated by the
  // low modes
  REQUIRE(r.best_vector.size() == 1001);
  CHECK(r.best_vector.norm() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(r.best_vector(0)) > 0.5);
  CHECK(std::abs(r.best_vector(1000)) < 1e-2);
}

TEST_CASE("extrapolation from a small schedule already lands near the limit") {
  const ExtremalResult r =
      backflow_infimum(kHeadline, {100, 150, 220, 300}, false);
  CHECK(r.best_vector.size() == 0);
  // deeper than the shallowest sample, and within a small margin of the
  // accurate-schedule value
  CHECK(r.p_value < r.extrapolation.points.front().second);
  CHECK(r.p_value == doctest::Approx(-0.0920).epsilon(0.01));
}

TEST_CASE("empty schedule is rejected") {
  CHECK_THROWS_AS(backflow_infimum(kHeadline, {}), std::invalid_argument);
  CHECK_THROWS_AS(scan_alpha(0.73, 0.0, {}, schedules::kFast), std::invalid_argument);
}

TEST_CASE("scan is deterministic across worker counts and survives bad points") {
  const std::vector<double> grid = {-0.1, 0.2, 0.36252, 0.5};
  const std::vector<long> sched = {100, 150, 220, 300};
  const auto serial = scan_alpha(0.73, 0.0, grid, sched, 1);
  const auto parallel = scan_alpha(0.73, 0.0, grid, sched, 4);

  REQUIRE(serial.size() == 4);
  CHECK_FALSE(serial[0].ok);  // alpha <= 0 is a per-point failure, not fatal
  CHECK(!serial[0].error.empty());
  for (std::size_t i = 1; i < serial.size(); ++i) {
    CHECK(serial[i].ok);
    CHECK(serial[i].p_value == parallel[i].p_value);
    CHECK(serial[i].alpha_over_pi == grid[i]);
  }
  // the headline alpha is the deepest of the sampled points
  CHECK(serial[2].p_value < serial[1].p_value);
  CHECK(serial[2].p_value < serial[3].p_value);
}

TEST_CASE("alpha_minimum finds the headline optimum at chi = 0.73") {
  const AlphaMinimum am = alpha_minimum(0.73, 0.0, schedules::kFast);
  CHECK(am.alpha_over_pi == doctest::Approx(0.36252).epsilon(0.01));
  CHECK(am.p_value == doctest::Approx(-0.0920).epsilon(0.002));
}
