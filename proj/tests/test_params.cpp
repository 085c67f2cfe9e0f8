#include <cmath>
#include <limits>
#include <random>

#include <doctest.h>

#include "lsq/errors.hpp"
#include "lsq/params.hpp"

using namespace lsq;

TEST_SUITE_BEGIN("params");

TEST_CASE("reference parameter sets validate") {
  const SystemParams a =
      make_params(0.1, 1.0, 15.0, -15.0, 30.0, 30.0, 10.0, 0.0);
  CHECK(a.delta3 == 30.0);
  CHECK(a.phi == 0.0);

  const SystemParams b =
      make_params(20.0, 1.0, 0.0, 0.0, 8.0, 8.0, 3.0, -M_PI / 2.0);
  CHECK(b.delta3 == 0.0);
  CHECK(b.phi == doctest::Approx(-M_PI / 2.0));
}

TEST_CASE("invalid inputs are rejected") {
  CHECK_THROWS_AS(make_params(1.0, -1.0, 0, 0, 1, 1, 1, 0), ValidationError);
  CHECK_THROWS_AS(make_params(0.0, 1.0, 0, 0, 1, 1, 1, 0), ValidationError);
  CHECK_THROWS_AS(make_params(-0.5, 1.0, 0, 0, 1, 1, 1, 0), ValidationError);
  CHECK_THROWS_AS(make_params(1.0, 2.0, 0, 0, 1, 1, 1, 0), ValidationError);
  CHECK_THROWS_AS(make_params(1.0, 1.0, 0, 0, -1, 1, 1, 0), ValidationError);
  CHECK_THROWS_AS(make_params(1.0, 1.0, 0, 0, 1, -2, 1, 0), ValidationError);
  CHECK_THROWS_AS(make_params(1.0, 1.0, 0, 0, 1, 1, -3, 0), ValidationError);
  const double nan = std::numeric_limits<double>::quiet_NaN();
  const double inf = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(make_params(1.0, 1.0, nan, 0, 1, 1, 1, 0), ValidationError);
  CHECK_THROWS_AS(make_params(1.0, 1.0, 0, 0, inf, 1, 1, 0), ValidationError);
  CHECK_THROWS_AS(make_params(1.0, 1.0, 0, 0, 1, 1, 1, nan), ValidationError);
}

TEST_CASE("zero Rabi frequencies are allowed") {
  const SystemParams p = make_params(1.0, 1.0, 0, 0, 0, 0, 0, 1.0);
  CHECK(p.omega1 == 0.0);
}

TEST_CASE("phase normalization lands in (-pi, pi] and is idempotent") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> wide(-50.0, 50.0);
  for (int k = 0; k < 2000; ++k) {
    const double a = wide(rng);
    const double n1 = normalize_angle(a);
    CHECK(n1 > -M_PI);
    CHECK(n1 <= M_PI);
    CHECK(normalize_angle(n1) == n1);
    // a and n1 agree modulo 2 pi
    CHECK(std::remainder(a - n1, 2.0 * M_PI) == doctest::Approx(0.0).epsilon(1e-12));
  }
  CHECK(normalize_angle(-M_PI) == M_PI);
  CHECK(normalize_angle(M_PI) == M_PI);
  CHECK(normalize_angle(3.0 * M_PI) == doctest::Approx(M_PI));
}

TEST_CASE("closed-loop detuning constraint holds exactly") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> delta(-40.0, 40.0);
  for (int k = 0; k < 500; ++k) {
    const SystemParams p =
        make_params(2.0, 1.0, delta(rng), delta(rng), 1, 1, 1, 0.5);
    CHECK(p.delta1 - p.delta2 - p.delta3 == 0.0);
  }
}

TEST_CASE("quadrature phase normalizes") {
  CHECK(QuadraturePhase(3.0 * M_PI).theta == doctest::Approx(M_PI));
  CHECK(QuadraturePhase().theta == 0.0);
  CHECK_THROWS_AS(QuadraturePhase(std::numeric_limits<double>::quiet_NaN()),
                  ValidationError);
}

TEST_SUITE_END();
