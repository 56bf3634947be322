#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "canprod/special.hpp"

using namespace canprod;

constexpr double kPi = std::numbers::pi;

TEST_CASE("log_gamma matches lgamma on a wide grid") {
  for (double x : {0.5, 1.0, 1.5, 2.0, 3.7, 10.0, 31.9, 32.0, 100.0, 1e4, 1e8}) {
    double want = std::lgamma(x);
    CHECK(std::abs(log_gamma(x) - want) <= 1e-13 * std::max(1.0, std::abs(want)));
  }
}

TEST_CASE("log_gamma recurrence") {
  for (double x : {0.5, 1.0, 2.5, 7.0, 50.0, 1e3}) {
    CHECK(log_gamma(x + 1.0) == doctest::Approx(log_gamma(x) + std::log(x)).epsilon(1e-12));
  }
}

TEST_CASE("log_gamma domain") { CHECK_THROWS_AS(log_gamma(0.0), std::domain_error); }

TEST_CASE("zeta_pos known values") {
  CHECK(zeta_pos(2.0).value == doctest::Approx(kPi * kPi / 6.0).epsilon(1e-12));
  CHECK(zeta_pos(4.0).value == doctest::Approx(std::pow(kPi, 4) / 90.0).epsilon(1e-12));
  CHECK(zeta_pos(3.0).value == doctest::Approx(1.2020569031595943).epsilon(1e-12));
  CHECK(zeta_pos(1.5).value == doctest::Approx(2.6123753486854883).epsilon(1e-11));
  CHECK(zeta_pos(1.1).value == doctest::Approx(10.584448464950803).epsilon(1e-10));
}

TEST_CASE("zeta_pos is decreasing and converged") {
  double prev = zeta_pos(1.2).value;
  for (double x : {1.5, 2.0, 3.0, 5.0, 10.0, 30.0}) {
    EvalResult r = zeta_pos(x);
    CHECK(r.converged);
    CHECK(r.value < prev);
    CHECK(r.value > 1.0);
    prev = r.value;
  }
}

TEST_CASE("zeta_neg trivial zeros and known values") {
  for (int k = 1; k <= 50; ++k) CHECK(zeta_neg(2.0 * k) == 0.0);
  CHECK(zeta_neg(1.0) == doctest::Approx(-1.0 / 12.0).epsilon(1e-13));
  CHECK(zeta_neg(3.0) == doctest::Approx(1.0 / 120.0).epsilon(1e-13));
  CHECK(zeta_neg(5.0) == doctest::Approx(-1.0 / 252.0).epsilon(1e-13));
  CHECK(zeta_neg(7.0) == doctest::Approx(1.0 / 240.0).epsilon(1e-13));
  CHECK(zeta_neg(0.5) == doctest::Approx(-0.20788622497735456).epsilon(1e-11));
}

TEST_CASE("zeta_neg functional-equation consistency") {
  // zeta(-t) = -sin(pi t/2) Gamma(1+t) zeta(1+t) / (pi (2 pi)^t)
  for (double t : {0.3, 1.0, 1.7, 3.0, 4.5, 9.0}) {
    double want = -std::sin(kPi * t / 2.0) * std::exp(log_gamma(1.0 + t)) *
                  zeta_pos(1.0 + t).value / (kPi * std::pow(2.0 * kPi, t));
    CHECK(std::abs(zeta_neg(t) - want) <= 1e-10 * std::max(1e-12, std::abs(want)));
  }
}

TEST_CASE("zeta_neg guards") {
  CHECK_THROWS_AS(zeta_neg(0.0), std::domain_error);
  CHECK(zeta_neg(1e6) == 0.0);  // huge even integer still hits the trivial zero
  CHECK_THROWS_AS(zeta_neg(1e6 + 0.5), std::range_error);
}

TEST_CASE("euler_gamma value") {
  CHECK(euler_gamma() == doctest::Approx(0.5772156649015329).epsilon(1e-15));
}

TEST_CASE("zeta_tail completes a partial sum") {
  double partial = 0.0;
  for (int n = 1; n <= 100; ++n) partial += 1.0 / (static_cast<double>(n) * n);
  CHECK(partial + detail::zeta_tail(2.0, 100.0) ==
        doctest::Approx(kPi * kPi / 6.0).epsilon(1e-14));
  partial = 0.0;
  for (int n = 1; n <= 50; ++n) partial += std::pow(n, -2.5);
  CHECK(partial + detail::zeta_tail(2.5, 50.0) ==
        doctest::Approx(zeta_pos(2.5).value).epsilon(1e-13));
}
