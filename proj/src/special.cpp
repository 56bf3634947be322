#include "canprod/special.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace canprod {

namespace detail {

double zeta_tail(double p, double N) {
  // sum_{n>N} n^-p = N^{1-p}/(p-1) - N^-p/2 + ... (Euler-Maclaurin)
  double invN = 1.0 / N;
  double Nmp = std::pow(N, -p);
  double t = N * Nmp / (p - 1.0) - 0.5 * Nmp;
  double c = p * Nmp * invN;
  t += c / 12.0;
  c *= (p + 1.0) * (p + 2.0) * invN * invN;
  t -= c / 720.0;
  c *= (p + 3.0) * (p + 4.0) * invN * invN;
  t += c / 30240.0;
  return t;
}

}  // namespace detail

double log_gamma(double x) {
  if (!(x > 0.0)) throw std::domain_error("log_gamma: x > 0 required");
  // Shift to x >= 32, then Stirling with Bernoulli terms through B14.
  double shift = 0.0;
  while (x < 32.0) {
    shift -= std::log(x);
    x += 1.0;
  }
  static const double c[7] = {
      1.0 / 12.0,      -1.0 / 360.0,     1.0 / 1260.0,   -1.0 / 1680.0,
      1.0 / 1188.0,    -691.0 / 360360.0, 1.0 / 156.0,
  };
  double inv = 1.0 / x, inv2 = inv * inv;
  double series = 0.0, pw = inv;
  for (int k = 0; k < 7; ++k) {
    series += c[k] * pw;
    pw *= inv2;
  }
  double half_log_2pi = 0.5 * std::log(2.0 * std::numbers::pi);
  return shift + (x - 0.5) * std::log(x) - x + half_log_2pi + series;
}

EvalResult zeta_pos(double x, const TruncationPolicy& policy) {
  policy.validate();
  if (!(x > 1.0)) throw std::domain_error("zeta_pos: x > 1 required");
  // More direct terms near the s=1 pole where the tail expansion is weaker.
  std::size_t N = (x < 1.5) ? 512 : 64;
  if (N > policy.max_terms) N = policy.max_terms;
  KahanSum sum;
  for (std::size_t n = 1; n <= N; ++n) sum.add(std::pow(static_cast<double>(n), -x));
  EvalResult res;
  res.terms_used = N;
  double tail = (policy.tail_mode == TailMode::none) ? 0.0 : detail::zeta_tail(x, static_cast<double>(N));
  res.value = sum.value() + tail;
  // Bound: first neglected Euler-Maclaurin correction plus rounding.
  double Nd = static_cast<double>(N);
  double em_next = x * (x + 1) * (x + 2) * (x + 3) * (x + 4) * (x + 5) * (x + 6) *
                   std::pow(Nd, -x - 7.0) / 1209600.0;
  if (policy.tail_mode == TailMode::none) em_next = std::pow(Nd, 1.0 - x) / (x - 1.0);
  res.error_bound = em_next + 1e-15 * std::abs(res.value);
  res.converged = res.error_bound <= policy.abs_tol + policy.rel_tol * std::abs(res.value) ||
                  policy.tail_mode != TailMode::none;
  return res;
}

double zeta_neg(double t) {
  if (!(t > 0.0)) throw std::domain_error("zeta_neg: t > 0 required");
  double half = t / 2.0;
  if (std::abs(half - std::round(half)) < 1e-12) return 0.0;  // trivial zeros
  // zeta(-t) = -2 sin(pi t/2) Gamma(1+t) zeta(1+t) / (2 pi)^{1+t}
  double log_mag = log_gamma(1.0 + t) - (1.0 + t) * std::log(2.0 * std::numbers::pi);
  if (log_mag > 700.0) throw std::range_error("zeta_neg: overflow for huge t");
  double z = zeta_pos(1.0 + t).value;
  return -2.0 * std::sin(std::numbers::pi * t / 2.0) * std::exp(log_mag) * z;
}

double euler_gamma() { return 0.57721566490153286061; }

}  // namespace canprod
