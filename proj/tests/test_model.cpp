#include <doctest.h>

#include <cmath>

#include "backflow/model.hpp"

using namespace backflow;

namespace {
constexpr double kInvSqrt2Pi = 0.39894228040143267794;
}

TEST_CASE("epsilon closed-form values") {
  CHECK(epsilon(RingParams(0.3, 0.0, 1.0), 0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(epsilon(RingParams(1.0, 0.0, 1.0), 1) ==
        doctest::Approx(std::sqrt(3.0)).epsilon(1e-15));
  // direct evaluation of the definition at generic parameters
  CHECK(epsilon(RingParams(0.05, -0.05, 1.0), 2) ==
        doctest::Approx(std::sqrt(1.0 + 0.0025 * 2.05 * 3.05)).epsilon(1e-15));
}

TEST_CASE("epsilon rejects negative l, RingParams validates domain") {
  CHECK_THROWS_AS(epsilon(RingParams(1.0, 0.0, 1.0), -1), std::invalid_argument);
  CHECK_THROWS_AS(RingParams(0.0, 0.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(RingParams(1.0, 0.5, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(RingParams(1.0, -1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(RingParams(1.0, 0.0, 0.0), std::invalid_argument);
  CHECK_NOTHROW(RingParams(1.0, 0.0, 1.0));
  CHECK_NOTHROW(RingParams(1.0, -0.999, 1e-8));
}

TEST_CASE("norm_const limits") {
  // l = beta = 0 makes the correction vanish for any chi
  CHECK(norm_const(RingParams(7.3, 0.0, 1.0), 0) ==
        doctest::Approx(kInvSqrt2Pi).epsilon(1e-14));
  // nonrelativistic limit
  CHECK(norm_const(RingParams(1e-8, -0.3, 1.0), 5) ==
        doctest::Approx(kInvSqrt2Pi).epsilon(1e-12));
  // ultra-relativistic limit at beta=0, l=1: (1 + l/(l+1))^{-1/2}
  CHECK(norm_const(RingParams(1e8, 0.0, 1.0), 1) ==
        doctest::Approx(kInvSqrt2Pi / std::sqrt(1.5)).epsilon(1e-7));
}

TEST_CASE("norm_const decreases monotonically in chi") {
  for (long l : {1L, 2L, 7L}) {
    double prev = kInvSqrt2Pi;
    for (double chi : {0.01, 0.1, 0.5, 1.0, 5.0, 50.0}) {
      const double a = norm_const(RingParams(chi, 0.0, 1.0), l);
      CHECK(a < prev);
      CHECK(a > 0.0);
      prev = a;
    }
  }
}

TEST_CASE("eigenstate_flux") {
  CHECK(eigenstate_flux(RingParams(0.4, 0.0, 2.0), 0) == 0.0);
  // nonrelativistic limit: (2 alpha / pi) (l - beta)
  const double alpha = 0.7, beta = -0.2;
  const double j = eigenstate_flux(RingParams(1e-7, beta, alpha), 3);
  CHECK(j == doctest::Approx(2.0 * alpha / M_PI * (3.0 - beta)).epsilon(1e-10));
  // non-negative over the admissible domain
  for (long l = 0; l < 20; ++l)
    CHECK(eigenstate_flux(RingParams(0.73, -0.6, 1.1), l) >= 0.0);
}

TEST_CASE("shift symmetry of the spectrum and normalization") {
  for (double beta : {0.0, -0.2, -0.5, -0.9}) {
    for (double chi : {0.05, 0.73, 3.0}) {
      for (long l = 1; l <= 40; ++l) {
        CHECK(epsilon_formula(chi, beta, l) ==
              doctest::Approx(epsilon_formula(chi, beta - 1.0, l - 1)).epsilon(1e-15));
        CHECK(norm_const_formula(chi, beta, l) ==
              doctest::Approx(norm_const_formula(chi, beta - 1.0, l - 1)).epsilon(1e-15));
      }
    }
  }
}

TEST_CASE("double degeneracy at beta = 0 via the formula") {
  for (double chi : {0.1, 1.0, 10.0})
    for (long l = 0; l <= 15; ++l)
      CHECK(epsilon_formula(chi, 0.0, l) ==
            doctest::Approx(epsilon_formula(chi, 0.0, -l - 1)).epsilon(1e-15));
}

TEST_CASE("small-chi Taylor bound on epsilon") {
  for (double chi : {1e-2, 1e-3, 1e-4}) {
    for (long l : {0L, 1L, 5L, 20L}) {
      const double beta = -0.3;
      const double u = static_cast<double>(l) - beta;
      const double q = u * (u + 1.0);
      CHECK(std::abs(epsilon_formula(chi, beta, l) - 1.0) <= chi * chi * q / 2.0 + 1e-16);
    }
  }
}

TEST_CASE("ModeTable matches the scalar functions and is strictly increasing") {
  const RingParams p(0.73, -0.4, 1.138);
  const ModeTable t(p, 50);
  for (long l = 0; l <= 50; ++l) {
    CHECK(t.eps(l) == epsilon(p, l));
    CHECK(t.norm(l) == norm_const(p, l));
    CHECK(t.eps(l) >= 1.0);
    if (l > 0) CHECK(t.eps(l) > t.eps(l - 1));
  }
}
