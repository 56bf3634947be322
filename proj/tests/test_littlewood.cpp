#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "canprod/littlewood.hpp"
#include "canprod/products.hpp"
#include "canprod/tameness.hpp"

using namespace canprod;

TEST_CASE("coefficient structure") {
  LittlewoodCoeffs c(2.0);
  CHECK(c.L == doctest::Approx(std::log(2.0)));
  CHECK(c.M_osc >= 1);
  CHECK(c.b[0] > 0.0);
  // a_m alternates and |a_m| -> 1
  CHECK(c.a(1) < 0.0);
  CHECK(c.a(2) > 0.0);
  CHECK(std::abs(c.a(40)) == doctest::Approx(1.0).epsilon(1e-10));
  CHECK_THROWS_AS(LittlewoodCoeffs(1.0), std::invalid_argument);
}

TEST_CASE("closed form matches the product for log F_s") {
  for (double s : {1.5, 2.0, 3.0, 10.0}) {
    LittlewoodCoeffs c(s);
    for (double x : {1.02, 1.7, 9.0, 123.0, 4096.0, 9.7e5}) {
      double direct = std::log(eval_F(s, x).value);
      double closed = logF_littlewood(c, x).value;
      CHECK(std::abs(direct - closed) <= 1e-9 * std::max(1.0, std::abs(direct)));
    }
  }
}

TEST_CASE("d1_logF matches finite differences of the closed form") {
  for (double s : {2.0, 3.0}) {
    LittlewoodCoeffs c(s);
    FnEvaluator lf{[&c](double t) { return logF_littlewood(c, t).value; }, {}, 1.0 + 1e-9, 1e300};
    for (double x : {3.0, 50.0, 2000.0}) {
      CHECK(d1_logF(c, x).value == doctest::Approx(d_m(lf, 1, x)).epsilon(1e-6));
    }
  }
}

TEST_CASE("d2/d3_logF match finite differences") {
  LittlewoodCoeffs c(2.0);
  FnEvaluator lf{[&c](double t) { return logF_littlewood(c, t).value; }, {}, 1.0 + 1e-9, 1e300};
  for (double x : {10.0, 300.0}) {
    CHECK(d2_logF(c, x).value == doctest::Approx(d_m(lf, 2, x)).epsilon(1e-4));
    CHECK(d3_logF(c, x).value == doctest::Approx(d_m(lf, 3, x)).epsilon(5e-2).scale(1.0));
  }
}

TEST_CASE("sZ_probe classifies powers of s") {
  std::vector<double> sched;
  for (int j = 10; j <= 40; ++j) sched.push_back(std::pow(2.0, j));

  LittlewoodCoeffs c2(2.0);
  SzResult member = sZ_probe(c2, 8.0, sched);
  CHECK(member.membership == SzMembership::member);
  CHECK(member.exponent == 3);
  CHECK(member.probe.kind == ProbeKind::converged);

  SzResult non = sZ_probe(c2, 3.0, sched);
  CHECK(non.membership == SzMembership::non_member);

  std::vector<double> sched3;
  for (int j = 8; j <= 28; ++j) sched3.push_back(std::pow(3.0, j));
  LittlewoodCoeffs c3(3.0);
  SzResult member3 = sZ_probe(c3, 9.0, sched3);
  CHECK(member3.membership == SzMembership::member);
  CHECK(member3.exponent == 2);
}

TEST_CASE("sZ_probe input guards") {
  LittlewoodCoeffs c(2.0);
  CHECK_THROWS_AS(sZ_probe(c, 2.0, {4.0, 8.0}), std::invalid_argument);  // short schedule
}

TEST_CASE("zeros of d3 for s=5: ratios converge to s") {
  LittlewoodCoeffs c(5.0);
  ZeroScan scan = zeros_d3(c, 1.0, std::pow(5.0, 12.0));
  REQUIRE(scan.c_points.size() >= 6);
  CHECK_FALSE(scan.refined_warning);
  double ratio = ratio_extract(scan.c_points, 5);
  CHECK(ratio == doctest::Approx(5.0).epsilon(0.03));
  // sign check: d3 actually changes sign across each reported square root
  for (double ck : scan.c_points.points) {
    double z = std::sqrt(ck);
    CHECK(d3_logF(c, z * 0.995).value * d3_logF(c, z * 1.005).value < 0.0);
  }
}

TEST_CASE("zeros_d3 guards") {
  LittlewoodCoeffs c(2.0);
  CHECK_THROWS_AS(zeros_d3(c, 0.5, 10.0), std::invalid_argument);
}
