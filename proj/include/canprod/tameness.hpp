#pragma once

#include <utility>
#include <vector>

#include "canprod/core.hpp"
#include "canprod/products.hpp"

namespace canprod {

// Covering-count estimator of Assouad dimension 0 for 1-D point sets:
// sup over centers x in X and scale pairs (R, r = R/ratio) of
// log N(x, R, r) / log(R/r), N computed by exact greedy covering.
double assouad_zero_estimate(const DiscretePointSet& X, const std::vector<double>& R_grid,
                             const std::vector<double>& r_ratios);
double assouad_zero_estimate(const DiscretePointSet& X);  // default grids

std::vector<double> assouad_default_R_grid(const DiscretePointSet& X);
std::vector<double> assouad_default_ratios();

struct ProbeThresholds {
  double converge = 1e-3;
  double oscillate = 1e-1;
};

// lim f(yt)/f(t) = y^alpha; verdict value is the exponent estimate alpha.
ProbeVerdict power_probe(const FnEvaluator& f, double y, const std::vector<double>& t_schedule,
                         const ProbeThresholds& th = {});

// For f = p(x) + c x^m log x + o(x^m log x): fit p and c, then probe
// lim [g(yt) - g(t)] with g = (f - p)/(c x^m); the limit is log y.
ProbeVerdict log_probe(const FnEvaluator& f, int m, double y, const std::vector<double>& t_schedule,
                       const ProbeThresholds& th = {});

// Gamma(x+et)Gamma(t)/(Gamma(et)Gamma(x+t)) -> e^x, evaluated in log space.
ProbeVerdict stirling_exp_probe(double x, const std::vector<double>& t_schedule,
                                const ProbeThresholds& th = {});

// Median of the last `tail` consecutive ratios of X.
double ratio_extract(const DiscretePointSet& X, std::size_t tail);

struct OmegaZeroDensity {
  long count_actual = 0;
  long count_model = 0;
  bool flat_warning = false;
};

// Sign-change count of the (rescaled) central difference of x*omega_s versus
// the analytic zero count of sin(x^{1/s} 2 pi cos(pi/s) + pi/s).
OmegaZeroDensity omega_zero_density(const ShapeParam& p, double x_lo, double x_hi);

struct FastSequenceReport {
  double min_ratio = 0.0;
  std::vector<int> sandwich_failures;   // k >= 2 violating k/2 < S_k < k(1+a_1/a_k)
  std::vector<int> map_failures;        // k with f((a_k, a_{k+1})) outside ((1/2-eps)k, (1+eps)k)
  std::vector<int> monotone_failures;   // k where sampled f is not increasing
  std::vector<int> d3_sign_change_ks;   // k whose gap contains a sign change of d3 of the log-product
  int d3_threshold = -1;                // least k with sign changes at every k' >= k in range
  bool k1_boundary_equality = false;    // S_1 = 1/2 boundary case (reported, not asserted)
  bool passed = false;
};

// Concluding-remarks checks for a fast sequence (consecutive ratios >= 100).
FastSequenceReport fast_sequence_check(const DiscretePointSet& a, double eps, int k_lo, int k_hi);

}  // namespace canprod
