#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "backflow/line_limit.hpp"
#include "backflow/sinc.hpp"

using namespace backflow;

TEST_CASE("gamma_of_z") {
  CHECK(gamma_of_z(0.5, 0.0) == 1.0);
  CHECK(gamma_of_z(1.0, 1.0) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  // small-eps Taylor
  const double e = 1e-4, z = 3.0;
  CHECK(gamma_of_z(e, z) ==
        doctest::Approx(1.0 + 0.5 * e * e * z * z).epsilon(1e-12));
}

TEST_CASE("line_kernel frozen value, symmetry, diagonal simplification") {
  CHECK(line_kernel(0.5, 2.0, 3.0) ==
        doctest::Approx(0.010481616957897608).epsilon(1e-13));
  for (double z : {0.3, 1.7, 8.0})
    for (double zp : {0.1, 2.2, 5.5})
      CHECK(line_kernel(0.25, z, zp) ==
            doctest::Approx(line_kernel(0.25, zp, z)).epsilon(1e-14));
  // k(z, z) = (2/pi) z / gamma(z)
  const double z = 1.7, e = 0.3;
  CHECK(line_kernel(e, z, z) ==
        doctest::Approx((2.0 / M_PI) * z / gamma_of_z(e, z)).epsilon(1e-13));
}

TEST_CASE("small-eps limit reproduces the nonrelativistic line kernel") {
  const double e = 1e-6;
  for (double z : {0.5, 2.0, 6.0}) {
    for (double zp : {0.1, 1.5, 4.0}) {
      const double nonrel = (1.0 / M_PI) * (z + zp) * sinc(z * z - zp * zp);
      CHECK(line_kernel(e, z, zp) == doctest::Approx(nonrel).epsilon(1e-8));
    }
  }
}

TEST_CASE("frozen Nystrom eigenvalue at eps = 0.01, z_max = 20, 400 nodes") {
  const LineResult r = line_min_eig(LineParams{0.01, 20.0, 400}, false);
  CHECK(r.lambda_min == doctest::Approx(-0.0367642255814).epsilon(1e-8));
  CHECK(r.z_max == 20.0);
  CHECK(r.n_nodes == 400);
}

TEST_CASE("quadrature convergence in the node count") {
  const double a = line_min_eig(LineParams{0.01, 20.0, 400}, false).lambda_min;
  const double b = line_min_eig(LineParams{0.01, 20.0, 800}, false).lambda_min;
  CHECK(std::abs(a - b) < 1e-6);
}

TEST_CASE("cutoff sensitivity warning fires on a too-small domain") {
  // z_max = 5 leaves far more than 1e-3 of the eigenvalue on the table
  const LineResult r = line_min_eig(LineParams{0.01, 5.0, 400}, true);
  CHECK(r.cutoff_warning);
}

TEST_CASE("validation") {
  CHECK_THROWS_AS(line_min_eig(LineParams{0.0, 20.0, 400}), std::invalid_argument);
  CHECK_THROWS_AS(line_min_eig(LineParams{0.01, -1.0, 400}), std::invalid_argument);
  CHECK_THROWS_AS(line_min_eig(LineParams{0.01, 20.0, 10}), std::invalid_argument);
  CHECK_THROWS_AS(line_infimum(0.01, {20.0, 30.0}), std::invalid_argument);
}

TEST_CASE("ladder extrapolation deepens the estimate monotonically") {
  const LineInfimum inf = line_infimum(0.01, {20.0, 30.0, 40.0});
  REQUIRE(inf.ladder.size() == 3);
  // growing domain strictly deepens the truncated infimum
  CHECK(inf.ladder[1].lambda_min < inf.ladder[0].lambda_min);
  CHECK(inf.ladder[2].lambda_min < inf.ladder[1].lambda_min);
  // frozen ladder values
  CHECK(inf.ladder[0].lambda_min == doctest::Approx(-0.03676422558141).epsilon(1e-7));
  CHECK(inf.ladder[1].lambda_min == doctest::Approx(-0.03731026906126).epsilon(1e-7));
  CHECK(inf.ladder[2].lambda_min == doctest::Approx(-0.03758109695660).epsilon(1e-7));
  // the extrapolant sits below every ladder point, in the plausible band
  CHECK(inf.value < inf.ladder[2].lambda_min);
  CHECK(inf.value > -0.040);
  // node counts follow the z^2 scaling rule with the floor applied
  CHECK(inf.ladder[0].n_nodes == 480);
  CHECK(inf.ladder[1].n_nodes == 1080);
  CHECK(inf.ladder[2].n_nodes == 1920);
}
