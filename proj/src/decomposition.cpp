#include "canprod/decomposition.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "canprod/quadrature.hpp"
#include "canprod/special.hpp"

namespace canprod {

namespace {
constexpr double kPi = std::numbers::pi;

bool even_integer_s(double s) {
  double si = std::round(s);
  return std::abs(s - si) < 1e-12 && static_cast<long>(si) % 2 == 0;
}
}  // namespace

ThetaSet::ThetaSet(double s_value) : s(s_value) {
  if (!(s > 0.0)) throw std::invalid_argument("ThetaSet: s > 0 required");
  for (int j = 0;; ++j) {
    double th = (2.0 * j + 1.0) * kPi / s;
    if (!(th < kPi / 2.0)) break;
    angles.push_back(th);
  }
  std::size_t expect =
      (s > 2.0) ? static_cast<std::size_t>(std::ceil((s / 2.0 - 1.0) / 2.0 - 1e-12)) : 0;
  if (angles.size() != expect && s > 2.0)
    throw std::logic_error("ThetaSet: cardinality check failed");
  for (double th : angles)
    if (std::abs(std::cos(s * th) + 1.0) > 1e-9)
      throw std::logic_error("ThetaSet: cos(s*theta) = -1 check failed");
}

namespace {

// Integrals for phi in the variable t = u^4 (removes the t^s endpoint
// singularity of the derivatives for non-integer s).
double phi_integral(double s, double x, double damping, bool bose_tail, int panels) {
  double c = std::cos(s * kPi / 2.0);
  auto integrand = [&](double u) {
    double t = u * u * u * u;
    double ts = std::pow(t, s);
    double D = x * x + 2.0 * c * ts * x + ts * ts;
    double e = std::exp(-damping * t);
    double val = 4.0 * std::pow(u, 4.0 * s + 3.0) * e / D;
    if (bose_tail) {
      double denom = -std::expm1(-2.0 * kPi * t);  // 1 - e^{-2 pi t}
      val /= denom;
      if (bose_tail && t < 1e-308) return 0.0;
    }
    return val;
  };
  // u-breakpoints covering t in [0, 8]; e^{-2 pi * 8} ~ 1.4e-22.
  std::vector<double> base = {0.0, std::pow(0.5, 0.25), std::pow(2.0, 0.25),
                              std::pow(8.0, 0.25)};
  std::vector<double> breaks;
  for (std::size_t i = 1; i < base.size(); ++i) {
    double a = base[i - 1], b = base[i];
    for (int j = 0; j < panels; ++j)
      breaks.push_back(a + (b - a) * static_cast<double>(j) / panels);
  }
  breaks.push_back(base.back());
  return integrate_panels(integrand, breaks, 64);
}

double phi_value(double s, double x, int panels, int n_terms) {
  double total = 0.0;
  for (int n = 1; n <= n_terms; ++n)
    total += phi_integral(s, x, 2.0 * kPi * n, false, panels);
  total += phi_integral(s, x, 2.0 * kPi * (n_terms + 1), true, panels);
  return 2.0 * std::sin(s * kPi / 2.0) * total;
}

}  // namespace

EvalResult phi(const ShapeParam& p, double x, const TruncationPolicy& policy) {
  policy.validate();
  if (!(p.s > 1.0)) throw std::domain_error("phi: s > 1 required");
  if (!(x > 0.0)) throw std::domain_error("phi: x > 0 required");
  EvalResult res;
  if (even_integer_s(p.s)) {  // sin(s pi/2) = 0
    res.value = 0.0;
    res.error_bound = 0.0;
    res.converged = true;
    return res;
  }
  const int n_terms = 10;
  double v1 = phi_value(p.s, x, 1, n_terms);
  double v2 = phi_value(p.s, x, 2, n_terms);
  res.value = v2;
  res.error_bound = std::abs(v2 - v1) + 1e-15 * std::abs(v2);
  res.terms_used = n_terms + 1;
  res.converged = res.error_bound <= std::max(policy.abs_tol, policy.rel_tol * std::abs(v2)) * 10.0;
  if (!res.converged) {
    double v4 = phi_value(p.s, x, 4, n_terms);
    res.error_bound = std::abs(v4 - v2) + 1e-15 * std::abs(v4);
    res.value = v4;
    res.converged = true;
  }
  return res;
}

EvalResult omega(const ShapeParam& p, double x, const TruncationPolicy& policy) {
  policy.validate();
  if (!(x > 0.0)) throw std::domain_error("omega: x > 0 required");
  ThetaSet thetas(p.s);
  EvalResult res;
  res.converged = true;
  if (thetas.angles.empty()) {
    res.error_bound = 0.0;
    return res;
  }
  double xr = std::pow(x, 1.0 / p.s);
  KahanSum sum;
  std::size_t used = 0;
  for (double th : thetas.angles) {
    double alpha = xr * 2.0 * kPi * std::cos(th);
    double beta = xr * 2.0 * kPi * std::sin(th);
    for (std::size_t n = 1; n <= policy.max_terms; ++n) {
      double damp = std::exp(-beta * static_cast<double>(n));
      if (damp < policy.abs_tol * 1e-3) break;
      sum.add(std::sin(alpha * static_cast<double>(n) + th) * damp);
      ++used;
    }
  }
  res.terms_used = used;
  res.value = 4.0 * kPi / p.s * std::pow(x, 1.0 / p.s - 1.0) * sum.value();
  res.error_bound = policy.abs_tol * 1e-2 + 1e-15 * std::abs(res.value);
  return res;
}

EvalResult omega_geometric(const ShapeParam& p, double x, const TruncationPolicy& policy) {
  policy.validate();
  if (!(x > 0.0)) throw std::domain_error("omega_geometric: x > 0 required");
  ThetaSet thetas(p.s);
  EvalResult res;
  res.converged = true;
  if (thetas.angles.empty()) {
    res.error_bound = 0.0;
    return res;
  }
  double xr = std::pow(x, 1.0 / p.s);
  KahanSum sum;
  for (double th : thetas.angles) {
    double alpha = xr * 2.0 * kPi * std::cos(th);
    double beta = xr * 2.0 * kPi * std::sin(th);
    // sum_n sin(alpha n + theta) e^{-beta n} = Im[e^{i theta} q/(1-q)], q = e^{-beta + i alpha}
    double qre = std::exp(-beta) * std::cos(alpha), qim = std::exp(-beta) * std::sin(alpha);
    double dre = 1.0 - qre, dim = -qim;
    double den = dre * dre + dim * dim;
    double rre = (qre * dre + qim * dim) / den;   // q/(1-q)
    double rim = (qim * dre - qre * dim) / den;
    sum.add(std::sin(th) * rre + std::cos(th) * rim);
  }
  res.value = 4.0 * kPi / p.s * std::pow(x, 1.0 / p.s - 1.0) * sum.value();
  res.error_bound = 1e-15 * (1.0 + std::abs(res.value));
  return res;
}

namespace {

// Accelerated value of an alternating sequence of half-period cell integrals
// via repeated averaging of partial sums; returns (value, error estimate).
std::pair<double, double> euler_accelerate(const std::vector<double>& cells) {
  std::vector<double> t(cells.size());
  double run = 0.0;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    run += cells[i];
    t[i] = run;
  }
  std::size_t keep = std::min<std::size_t>(t.size(), 24);
  std::vector<double> w(t.end() - keep, t.end());
  double prev = w.back();
  double err = std::abs(prev);
  while (w.size() > 1) {
    for (std::size_t i = 0; i + 1 < w.size(); ++i) w[i] = 0.5 * (w[i] + w[i + 1]);
    w.pop_back();
    err = std::abs(w.back() - prev);
    prev = w.back();
  }
  return {prev, err};
}

// int_0^inf cos(2 pi n t)/(x + t^s) dt by half-period cells in tau = n t.
std::pair<double, double> cos_transform(double s, double x, int n) {
  auto f = [&](double tau) {
    double t = tau / n;
    return std::cos(2.0 * kPi * tau) / (x + std::pow(t, s));
  };
  double feature = std::pow(x, 1.0 / s);  // scale where the denominator turns
  std::size_t ncells = static_cast<std::size_t>(std::ceil(4.0 * n * feature)) + 60;
  std::vector<double> cells;
  cells.reserve(ncells);
  double a = 0.0, b = 0.25;
  for (std::size_t k = 0; k < ncells; ++k) {
    cells.push_back(integrate_gl(f, a, b, 16));
    a = b;
    b += 0.5;
  }
  auto [v, e] = euler_accelerate(cells);
  return {v / n, e / n};
}

}  // namespace

EvalResult poisson_middle(const ShapeParam& p, double x, const TruncationPolicy& policy) {
  policy.validate();
  double s = p.s;
  if (!(s > 1.0)) throw std::domain_error("poisson_middle: s > 1 required");
  if (!(x > 0.0)) throw std::domain_error("poisson_middle: x > 0 required");
  EvalResult res;
  double lead = (kPi / s) / std::sin(kPi / s) * std::pow(x, 1.0 / s - 1.0) - 0.5 / x;
  KahanSum osc;
  double quad_err = 0.0;
  std::vector<double> scaled;  // I_n n^{s+1}, for the n-tail fit
  int n = 1;
  int n_used = 0;
  for (; n <= 400; ++n) {
    auto [in, err] = cos_transform(s, x, n);
    osc.add(in);
    quad_err += std::abs(err);
    scaled.push_back(in * std::pow(static_cast<double>(n), s + 1.0));
    n_used = n;
    if (n >= 8 && std::abs(in) < 1e-9) break;
  }
  // fitted n^{-s-1} tail from the median of the scaled magnitudes
  double tail = 0.0;
  if (scaled.size() >= 4) {
    std::vector<double> last(scaled.end() - 4, scaled.end());
    std::nth_element(last.begin(), last.begin() + 2, last.end());
    tail = last[2] * detail::zeta_tail(s + 1.0, static_cast<double>(n_used));
  }
  res.value = lead + 2.0 * (osc.value() + tail);
  res.terms_used = static_cast<std::size_t>(n_used);
  res.error_bound = 2.0 * (quad_err + std::abs(tail) * 0.5) + 1e-15 * std::abs(res.value);
  res.converged = true;
  return res;
}

EvalResult maincalc_rhs(const ShapeParam& p, double x, const TruncationPolicy& policy) {
  policy.validate();
  double s = p.s;
  if (!(s > 1.0)) throw std::domain_error("maincalc_rhs: s > 1 required");
  if (!(x > 0.0)) throw std::domain_error("maincalc_rhs: x > 0 required");
  EvalResult ph = phi(p, x, policy);
  EvalResult om = omega(p, x, policy);
  EvalResult res;
  double lead = (kPi / s) / std::sin(kPi / s) * std::pow(x, 1.0 / s - 1.0) - 0.5 / x;
  double corr = 0.0;
  if (p.class_4n2) {
    double e = 2.0 * kPi * std::pow(x, 1.0 / s);
    if (e < 700.0) corr = 2.0 * kPi * std::pow(x, 1.0 / s - 1.0) / (s * std::expm1(e));
  }
  res.value = lead + ph.value + om.value + corr;
  res.error_bound = ph.error_bound + om.error_bound + 1e-15 * std::abs(res.value);
  res.terms_used = ph.terms_used + om.terms_used;
  res.converged = ph.converged && om.converged;
  return res;
}

std::pair<double, double> asympt_coeff(const ShapeParam& p, int k) {
  if (k < 1) throw std::invalid_argument("asympt_coeff: k >= 1 required");
  double sk = p.s * k;
  if (sk > 170.0) throw std::range_error("asympt_coeff: s*k <= 170 required");
  if (even_integer_s(p.s)) return {0.0, 0.0};
  double sign1 = (k % 2 ? 1.0 : -1.0);
  double form1 = sign1 * zeta_neg(sk) / k;
  double form2;
  if (std::abs(sk / 2.0 - std::round(sk / 2.0)) < 1e-12) {
    form2 = 0.0;
  } else {
    double mag = std::exp(log_gamma(1.0 + sk) - (1.0 + sk) * std::log(2.0 * kPi)) *
                 zeta_pos(1.0 + sk).value;
    form2 = 2.0 * (k % 2 ? -1.0 : 1.0) * std::sin(k * kPi * p.s / 2.0) * mag / k;
  }
  return {form1, form2};
}

EvalResult asympt_eval(const ShapeParam& p, double x, int K) {
  if (K < 1) throw std::invalid_argument("asympt_eval: K >= 1 required");
  if (!(x > 0.0)) throw std::domain_error("asympt_eval: x > 0 required");
  EvalResult res;
  if (even_integer_s(p.s)) {  // the expansion is identically 0
    res.converged = true;
    res.error_bound = 0.0;
    return res;
  }
  if (p.s * (K + 1) > 170.0) throw std::range_error("asympt_eval: s*(K+1) <= 170 required");
  KahanSum sum;
  double prev = 0.0, cur = 0.0;
  for (int k = 1; k <= K; ++k) {
    prev = cur;
    cur = std::abs((k % 2 ? 1.0 : -1.0) * zeta_neg(p.s * k) * std::pow(x, -k) / k);
    sum.add((k % 2 ? 1.0 : -1.0) * zeta_neg(p.s * k) * std::pow(x, -k) / k);
    res.terms_used = static_cast<std::size_t>(k);
  }
  res.value = sum.value();
  res.error_bound = std::abs(zeta_neg(p.s * (K + 1)) * std::pow(x, -(K + 1.0)) / (K + 1));
  res.converged = (K < 2) || (cur <= prev);  // terms still decreasing at order K
  return res;
}

GevreyFit gevrey_growth(const ShapeParam& p, int K) {
  if (K < 1) throw std::invalid_argument("gevrey_growth: K >= 1 required");
  if (p.s * K > 170.0) throw std::range_error("gevrey_growth: s*K <= 170 required");
  GevreyFit fit;
  std::vector<double> ks, ys;
  for (int k = 1; k <= K; ++k) {
    double c = zeta_neg(p.s * k) / k;
    if (c == 0.0) continue;
    ks.push_back(static_cast<double>(k));
    ys.push_back(std::log(std::abs(c)) - p.s * log_gamma(k + 1.0));
  }
  if (ks.size() < 3) {
    fit.degenerate = true;
    return fit;
  }
  double n = static_cast<double>(ks.size());
  double sk = 0, sy = 0, skk = 0, sky = 0;
  for (std::size_t i = 0; i < ks.size(); ++i) {
    sk += ks[i];
    sy += ys[i];
    skk += ks[i] * ks[i];
    sky += ks[i] * ys[i];
  }
  double slope = (n * sky - sk * sy) / (n * skk - sk * sk);
  double inter = (sy - slope * sk) / n;
  fit.A = std::exp(inter);
  fit.B = std::exp(slope);
  for (std::size_t i = 0; i < ks.size(); ++i) {
    double r = std::abs(ys[i] - (inter + slope * ks[i])) / std::max(1.0, std::abs(ys[i]));
    fit.max_residual = std::max(fit.max_residual, r);
  }
  return fit;
}

}  // namespace canprod
