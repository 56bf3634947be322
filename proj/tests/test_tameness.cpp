#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>

#include "canprod/pointset_io.hpp"
#include "canprod/products.hpp"
#include "canprod/tameness.hpp"

using namespace canprod;

namespace {

DiscretePointSet geometric(double base, int kmax) {
  std::vector<double> pts;
  for (int k = 0; k <= kmax; ++k) pts.push_back(std::pow(base, k));
  return DiscretePointSet(std::move(pts));
}

DiscretePointSet arithmetic(long lo, long hi) {
  std::vector<double> pts;
  for (long i = lo; i <= hi; ++i) pts.push_back(static_cast<double>(i));
  return DiscretePointSet(std::move(pts));
}

std::vector<double> log_sched(double lo, double hi, int n) {
  std::vector<double> t;
  for (int i = 0; i < n; ++i)
    t.push_back(lo * std::pow(hi / lo, i / static_cast<double>(n - 1)));
  return t;
}

}  // namespace

TEST_CASE("DiscretePointSet ordering is enforced") {
  CHECK_THROWS_AS(DiscretePointSet({1.0, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(DiscretePointSet({2.0, 1.0}), std::invalid_argument);
}

TEST_CASE("assouad estimator: dense sets score high, near-zero never exceeds 1") {
  double dense = assouad_zero_estimate(arithmetic(1, 300));
  CHECK(dense >= 0.9);
  CHECK(dense <= 1.0);
  double sparse = assouad_zero_estimate(geometric(2.0, 20));
  CHECK(sparse >= 0.0);
  CHECK(sparse <= 1.0);
  CHECK(sparse < dense);
}

TEST_CASE("assouad estimator is scale invariant") {
  std::vector<double> base = {1.0, 2.0, 3.0, 5.0, 8.0, 13.0, 21.0, 34.0, 55.0};
  std::vector<double> scaled;
  for (double v : base) scaled.push_back(3.0 * v);
  double a = assouad_zero_estimate(DiscretePointSet(base));
  double b = assouad_zero_estimate(DiscretePointSet(scaled));
  CHECK(a == doctest::Approx(b).epsilon(1e-12));
}

TEST_CASE("assouad estimator guards") {
  CHECK_THROWS_AS(assouad_zero_estimate(DiscretePointSet({1.0})), std::invalid_argument);
  DiscretePointSet X({1.0, 2.0, 3.0});
  CHECK_THROWS_AS(assouad_zero_estimate(X, {10.0}, {0.5}), std::invalid_argument);
}

TEST_CASE("power_probe recovers exponents of pure powers") {
  for (double alpha : {-1.0, 0.5, 2.0}) {
    FnEvaluator f{[alpha](double t) { return std::pow(t, alpha); }, {}, 1e-12, 1e300};
    ProbeVerdict v = power_probe(f, 2.0, log_sched(1e2, 1e6, 12));
    REQUIRE(v.kind == ProbeKind::converged);
    CHECK(*v.value == doctest::Approx(alpha).epsilon(1e-6));
    CHECK(v.trace.size() == 12);
  }
}

TEST_CASE("power_probe flags log-periodic ratios as non-convergent") {
  FnEvaluator f{[](double t) { return 2.0 + std::sin(3.0 * std::log(t)); }, {}, 1e-12, 1e300};
  ProbeVerdict v = power_probe(f, 3.0, log_sched(1e2, 1e8, 16));
  CHECK(v.kind != ProbeKind::converged);
}

TEST_CASE("log_probe recovers log y on a synthetic polynomial-plus-log model") {
  FnEvaluator f{[](double t) { return 3.0 * t * t * std::log(t) + t * t - 4.0 * t + 1.0; },
                {}, 1e-12, 1e300};
  ProbeVerdict v = log_probe(f, 2, 2.0, log_sched(1e2, 1e5, 12));
  REQUIRE(v.kind == ProbeKind::converged);
  CHECK(*v.value == doctest::Approx(std::log(2.0)).epsilon(1e-4));
}

TEST_CASE("log_probe on the genus-1 product second derivative") {
  ShapeParam p(1.0);
  FnEvaluator f{[&p](double t) { return d2_logW_analytic(p, t).value; }, {}, 1e-6, 1e300};
  ProbeVerdict v = log_probe(f, 1, 2.0, log_sched(1e2, 1e5, 12));
  REQUIRE(v.kind == ProbeKind::converged);
  CHECK(std::abs(*v.value - std::log(2.0)) < 1e-2);
}

TEST_CASE("stirling_exp_probe tends to e^x") {
  for (double x : {0.0, 1.0, -1.0}) {
    ProbeVerdict v = stirling_exp_probe(x, log_sched(1e2, 1e6, 12));
    REQUIRE(v.kind == ProbeKind::converged);
    CHECK(*v.value == doctest::Approx(std::exp(x)).epsilon(1e-4));
  }
}

TEST_CASE("ratio_extract exact cases") {
  CHECK(ratio_extract(geometric(2.0, 6), 3) == doctest::Approx(2.0));
  CHECK(ratio_extract(DiscretePointSet({1.0, 3.0, 9.0, 27.0}), 2) == doctest::Approx(3.0));
  CHECK_THROWS_AS(ratio_extract(DiscretePointSet({1.0, 2.0}), 5), std::invalid_argument);
}

TEST_CASE("omega zero density matches the analytic model count") {
  for (double s : {3.0, 5.0}) {
    OmegaZeroDensity d = omega_zero_density(ShapeParam(s), 10.0, 200.0);
    CHECK(d.count_model > 0);
    CHECK_FALSE(d.flat_warning);
    CHECK(d.count_actual >= d.count_model - 1);
    CHECK(d.count_actual <= d.count_model + 2);
  }
  CHECK_THROWS_AS(omega_zero_density(ShapeParam(2.0), 1.0, 10.0), std::domain_error);
}

TEST_CASE("fast_sequence_check passes a uniformly fast geometric sequence") {
  FastSequenceReport r = fast_sequence_check(geometric(100.0, 8), 0.1, 1, 6);
  CHECK(r.passed);
  CHECK(r.min_ratio == doctest::Approx(100.0));
  CHECK(r.sandwich_failures.empty());
  CHECK(r.map_failures.empty());
  CHECK(r.monotone_failures.empty());
  CHECK(r.d3_threshold >= 1);
}

TEST_CASE("fast_sequence_check on a super-geometric family") {
  std::vector<double> a = {1.0};
  for (int n = 1; n <= 7; ++n) a.push_back(a.back() * (100.0 + n));
  FastSequenceReport r = fast_sequence_check(DiscretePointSet(a), 0.1, 1, 5);
  CHECK(r.min_ratio >= 100.0);
  CHECK(r.passed);
}

TEST_CASE("fast_sequence_check rejects slow sequences") {
  CHECK_THROWS_AS(fast_sequence_check(arithmetic(1, 10), 0.1, 1, 3), std::invalid_argument);
}

TEST_CASE("pointset CSV round-trip") {
  DiscretePointSet X({0.5, 1.0, 2.25, 1e17, 1.2345678901234567e30});
  std::ostringstream out;
  write_pointset_csv(X, out);
  std::string text = out.str();
  CHECK(text.rfind("x\n", 0) == 0);
  CHECK(text.find('\r') == std::string::npos);
  std::istringstream in(text);
  DiscretePointSet Y = read_pointset_csv(in);
  REQUIRE(Y.size() == X.size());
  for (std::size_t i = 0; i < X.size(); ++i) CHECK(Y.points[i] == X.points[i]);
}
