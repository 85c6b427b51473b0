#include <doctest.h>

#include <cmath>
#include <random>

#include "ybfr/polarimeter.hpp"
#include "ybfr/rational.hpp"

using namespace ybfr;

TEST_SUITE("polarimeter") {
  TEST_CASE("balanced at zero rotation") {
    const auto r = read(1.0, 0.0, 0.0);
    CHECK(r.p_plus == r.p_minus);
    CHECK(r.p_out == 1.0);
    CHECK(r.difference() == 0.0);
  }

  TEST_CASE("quarter-turn sends everything into one port") {
    const auto r = read(1.0, 0.0, std::numbers::pi / 4.0);
    CHECK(r.p_minus == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(r.p_plus == doctest::Approx(1.0).epsilon(1e-12));
  }

  TEST_CASE("absorption example") {
    // od 0.12 = (2/3) * 0.18: the 171 beam probed on its F'=3/2 line
    const auto r = read(1.0, 0.12, 0.0);
    CHECK(r.p_out == doctest::Approx(0.887).epsilon(1e-3));
    CHECK(r.optical_depth == doctest::Approx(0.12).epsilon(1e-12));
    CHECK(column_from_depth(r.optical_depth, Rational(2, 3)) ==
          doctest::Approx(0.18).epsilon(1e-12));
  }

  TEST_CASE("reading identities over random inputs") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> odist(0.0, 3.0);
    std::uniform_real_distribution<double> phidist(-1.5, 1.5);
    for (int i = 0; i < 500; ++i) {
      const double od = odist(rng);
      const double phi = phidist(rng);
      const auto r = read(2.5, od, phi);
      CHECK(r.p_plus + r.p_minus == doctest::Approx(r.p_out).epsilon(1e-12));
      CHECK(std::abs(r.difference()) <= r.p_out * (1.0 + 1e-12));
      CHECK(r.difference() == doctest::Approx(r.p_out * std::sin(2.0 * phi)).epsilon(1e-12));
      // read then optical_depth round-trips the absorption
      CHECK(optical_depth(r.p_in, r.p_out) == doctest::Approx(od).epsilon(1e-12));
    }
  }

  TEST_CASE("optical depth basics") {
    CHECK(optical_depth(1.0, 1.0) == 0.0);
    CHECK(optical_depth(1.0, 1.0 / std::numbers::e) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK_THROWS_AS(optical_depth(1.0, 1.5), std::domain_error);
    CHECK_THROWS_AS(optical_depth(0.0, 0.5), std::domain_error);
    CHECK_THROWS_AS(optical_depth(1.0, 0.0), std::domain_error);
  }

  TEST_CASE("optical depth is strictly decreasing in p_out") {
    double prev = optical_depth(1.0, 0.05);
    for (double p = 0.10; p <= 1.0; p += 0.05) {
      const double od = optical_depth(1.0, p);
      CHECK(od < prev);
      prev = od;
    }
  }

  TEST_CASE("column from depth") {
    CHECK(column_from_depth(0.05, Rational(2, 3)) == doctest::Approx(0.075).epsilon(1e-12));
    CHECK(column_from_depth(0.14, Rational(4, 9)) == doctest::Approx(0.315).epsilon(1e-12));
    CHECK(column_from_depth(0.37, Rational(1)) == doctest::Approx(0.37).epsilon(1e-15));
    CHECK_THROWS_AS(column_from_depth(0.1, 0.0), std::domain_error);
    CHECK_THROWS_AS(column_from_depth(0.1, 1.5), std::domain_error);
  }

  TEST_CASE("noisy read is seed-deterministic") {
    std::mt19937_64 a(77), b(77);
    const auto ra = read_noisy(1.0, 0.1, 0.01, 1e-4, a);
    const auto rb = read_noisy(1.0, 0.1, 0.01, 1e-4, b);
    CHECK(ra.p_plus == rb.p_plus);
    CHECK(ra.p_minus == rb.p_minus);
    std::mt19937_64 c(78);
    const auto rc = read_noisy(1.0, 0.1, 0.01, 1e-4, c);
    CHECK(rc.p_plus != ra.p_plus);
  }
}
