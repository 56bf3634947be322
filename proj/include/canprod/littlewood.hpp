#pragma once

#include <vector>

#include "canprod/core.hpp"

namespace canprod {

// Coefficients of the closed-form expansion of log F_s (x > 1):
//   log F_s(x) = (log x)^2/(2L) - (log x)/2 + pi^2/(6L) + L/12
//                + sum_m a_m x^-m / m - sum_m (b_m/m) cos(2 pi m log_s x),
// with L = log s, a_m = (-s)^m/(s^m-1), b_m = csch(2 pi^2 m / L).
struct LittlewoodCoeffs {
  double s;
  double L;                 // log s
  std::vector<double> b;    // b_1 .. b_{M_osc}
  std::size_t M_osc;
  TruncationPolicy policy;

  explicit LittlewoodCoeffs(double s_value, const TruncationPolicy& pol = {});

  // a_m in the overflow-safe form (-1)^m / (1 - s^-m).
  double a(int m) const;
  // smallest M with x^-M/(1 - 1/x) below abs_tol (|a_m| <= s/(s-1) bound)
  std::size_t m_poly(double x) const;
};

EvalResult logF_littlewood(const LittlewoodCoeffs& c, double x);
EvalResult d1_logF(const LittlewoodCoeffs& c, double x);
EvalResult d2_logF(const LittlewoodCoeffs& c, double x);
EvalResult d3_logF(const LittlewoodCoeffs& c, double x);

// Classification outcome for y against the multiplicative group s^Z.
enum class SzMembership { member, non_member, inconclusive };
struct SzResult {
  SzMembership membership = SzMembership::inconclusive;
  int exponent = 0;  // meaningful iff membership == member
  ProbeVerdict probe;
};

// Probe lim_t [d1_logF(y t) - d1_logF(t)] = log_s y; integer limit <=> y in s^Z.
SzResult sZ_probe(const LittlewoodCoeffs& c, double y, const std::vector<double>& t_schedule);

struct ZeroScan {
  DiscretePointSet c_points;  // squares of the zeros of d3 log F_s
  bool refined_warning = false;
};

// Zeros z of d3 log F_s with z in (x_lo, x_hi), scanned in u = sqrt(z) and
// reported as c_k = z^2 (consecutive-ratio limit s).
ZeroScan zeros_d3(const LittlewoodCoeffs& c, double x_lo, double x_hi);

}  // namespace canprod
