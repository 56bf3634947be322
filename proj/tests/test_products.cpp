#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "canprod/products.hpp"
#include "canprod/special.hpp"

using namespace canprod;

constexpr double kPi = std::numbers::pi;

TEST_CASE("ShapeParam classification") {
  CHECK(ShapeParam(2.0).class_4n2);
  CHECK(ShapeParam(6.0).class_4n2);
  CHECK(ShapeParam(6.0).class_2n4);
  CHECK(ShapeParam(4.0).class_2n4);
  CHECK_FALSE(ShapeParam(4.0).class_4n2);
  CHECK_FALSE(ShapeParam(3.0).class_2n4);
  CHECK(ShapeParam(0.5).recip_integer.value_or(0) == 2);
  CHECK(ShapeParam(0.5).genus == 2);
  CHECK(ShapeParam(1.0).genus == 1);
  CHECK(ShapeParam(1.5).genus == 0);
  CHECK_THROWS_AS(ShapeParam(0.0), std::invalid_argument);
}

TEST_CASE("W_2 closed form sinh(pi sqrt(x))/(pi sqrt(x))") {
  ShapeParam p(2.0);
  for (double x : {0.25, 1.0, 4.0, 9.0}) {
    double r = kPi * std::sqrt(x);
    CHECK(eval_W(p, x).value == doctest::Approx(std::sinh(r) / r).epsilon(1e-10));
  }
}

TEST_CASE("W_1 genus-1 product equals exp(-gamma x)/Gamma(1+x)") {
  ShapeParam p(1.0);
  for (double x : {1.0, 2.0, 3.0}) {
    double want = std::exp(-euler_gamma() * x - std::lgamma(1.0 + x));
    CHECK(eval_W(p, x).value == doctest::Approx(want).epsilon(1e-9));
  }
}

TEST_CASE("W_{1/2} genus-2 product against slow direct partial product") {
  ShapeParam p(0.5);
  double x = 2.0;
  // direct genus-2 Weierstrass factors, summed in log space
  double acc = 0.0;
  for (int n = 1; n <= 4000000; ++n) {
    double y = x / std::sqrt(static_cast<double>(n));
    acc += std::log1p(y) - y + 0.5 * y * y;
  }
  // remaining tail: sum y^3/3 - y^4/4 + O(y^5)
  acc += (x * x * x / 3.0) * detail::zeta_tail(1.5, 4000000.0) -
         (x * x * x * x / 4.0) * detail::zeta_tail(2.0, 4000000.0);
  CHECK(dm_logW(p, 0, x).value == doctest::Approx(acc).epsilon(1e-6));
}

TEST_CASE("F shift identity F_s(s x) = (1+x) F_s(x)") {
  for (double s : {1.5, 2.0, 3.0, 10.0}) {
    for (double x : {0.5, 2.0, 7.0}) {
      CHECK(eval_F(s, s * x).value ==
            doctest::Approx((1.0 + x) * eval_F(s, x).value).epsilon(1e-11));
    }
  }
}

TEST_CASE("logderiv_F matches finite differences of log F") {
  for (double s : {1.5, 3.0}) {
    for (double x : {0.7, 5.0, 40.0}) {
      FnEvaluator lf{[s](double t) { return std::log(eval_F(s, t).value); }, {}, 1e-12, 1e300};
      double fd = d_m(lf, 1, x) / x;  // d/dx = (x d/dx)/x
      CHECK(logderiv_F(s, x).value == doctest::Approx(fd).epsilon(1e-6));
    }
  }
}

TEST_CASE("logderiv_W matches finite differences of log W") {
  for (double s : {1.5, 2.5, 6.0}) {
    ShapeParam p(s);
    for (double x : {0.5, 1.0, 3.0, 10.0, 100.0, 1000.0}) {
      FnEvaluator lw{[&p](double t) { return dm_logW(p, 0, t).value; }, {}, 1e-12, 1e300};
      double fd = d_m(lw, 1, x) / x;
      CHECK(logderiv_W(p, x).value == doctest::Approx(fd).epsilon(1e-6));
    }
  }
}

TEST_CASE("dm_logW m=1 equals x * logderiv_W") {
  for (double s : {1.2, 2.0, 5.0}) {
    ShapeParam p(s);
    for (double x : {0.8, 4.0, 64.0}) {
      CHECK(dm_logW(p, 1, x).value ==
            doctest::Approx(x * logderiv_W(p, x).value).epsilon(1e-11));
    }
  }
}

TEST_CASE("analytic d2/d3 match finite differences") {
  for (double s : {1.5, 3.0, 6.0}) {
    ShapeParam p(s);
    FnEvaluator lw{[&p](double t) { return dm_logW(p, 0, t).value; }, {}, 1e-12, 1e300};
    for (double x : {1.0, 10.0, 200.0}) {
      CHECK(d2_logW_analytic(p, x).value == doctest::Approx(d_m(lw, 2, x)).epsilon(1e-5));
      CHECK(d3_logW_analytic(p, x).value ==
            doctest::Approx(d_m(lw, 3, x)).epsilon(2e-4).scale(1.0));
    }
  }
}

TEST_CASE("d_m reproduces k^m x^k on monomials") {
  FnEvaluator sq{[](double t) { return t * t; }, {}, 1e-12, 1e300};
  CHECK(d_m(sq, 3, 3.0) == doctest::Approx(8.0 * 9.0).epsilon(1e-6));
  CHECK(d_m(sq, 1, 3.0) == doctest::Approx(2.0 * 9.0).epsilon(1e-9));
  CHECK(d_m(sq, 0, 3.0) == doctest::Approx(9.0).epsilon(1e-15));
}

TEST_CASE("domain guards") {
  ShapeParam p(1.5);
  CHECK_THROWS_AS(dm_logW(p, 4, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(dm_logW(p, 0, -1.0), std::domain_error);
  CHECK_THROWS_AS(eval_F(1.0, 2.0), std::domain_error);
  CHECK_THROWS_AS(logderiv_W(ShapeParam(1.0), 2.0), std::domain_error);
}

TEST_CASE("EvalResult reports convergence and term counts") {
  EvalResult r = eval_W(ShapeParam(3.0), 7.0);
  CHECK(r.converged);
  CHECK(r.terms_used > 0);
  CHECK(std::isfinite(r.error_bound));
}
