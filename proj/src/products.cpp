#include "canprod/products.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "canprod/special.hpp"

namespace canprod {

ShapeParam::ShapeParam(double s_value) : s(s_value) {
  if (!(s > 0.0)) throw std::invalid_argument("ShapeParam: s > 0 required");
  double r = 1.0 / s;
  if (std::abs(r - std::round(r)) < 1e-12 && std::round(r) >= 1.0)
    recip_integer = static_cast<int>(std::round(r));
  genus = recip_integer ? *recip_integer : static_cast<int>(std::floor(r));
  double si = std::round(s);
  bool is_int = std::abs(s - si) < 1e-12;
  int n = static_cast<int>(si);
  class_2n4 = is_int && n >= 4 && n % 2 == 0;
  class_4n2 = is_int && n >= 2 && (n - 2) % 4 == 0;
}

namespace {

// (x d/dx)^m log(1+y) with y = x/a (so that d y = y).
inline double dm_log1p(int m, double y) {
  switch (m) {
    case 0: return std::log1p(y);
    case 1: return y / (1.0 + y);
    case 2: return y / ((1.0 + y) * (1.0 + y));
    default: {
      double u = 1.0 + y;
      return y * (1.0 - y) / (u * u * u);
    }
  }
}

inline double j_coeff(int m, int j) {
  // d_m applied to y^j/j brings a factor j^m; the genus correction carries 1/j.
  return (m == 0) ? 1.0 / j : std::pow(static_cast<double>(j), m - 1);
}

}  // namespace

EvalResult dm_logW(const ShapeParam& p, int m, double x, const TruncationPolicy& policy) {
  policy.validate();
  if (!(x > 0.0)) throw std::domain_error("dm_logW: x > 0 required");
  if (m < 0 || m > 3) throw std::invalid_argument("dm_logW: 0 <= m <= 3 required");
  double s = p.s;
  int g = p.genus;

  std::size_t N = static_cast<std::size_t>(
      std::max(100.0, std::ceil(std::pow(4.0 * x, 1.0 / s))));
  EvalResult res;
  if (N > policy.max_terms) {
    N = policy.max_terms;
    res.converged = false;
  }

  KahanSum sum;
  for (std::size_t n = 1; n <= N; ++n) {
    double y = x / std::pow(static_cast<double>(n), s);
    double t = dm_log1p(m, y);
    double yj = 1.0;
    for (int j = 1; j <= g; ++j) {
      yj *= y;
      t += (j % 2 ? -1.0 : 1.0) * j_coeff(m, j) * yj;
    }
    sum.add(t);
  }
  res.terms_used = N;

  // Tail over n > N: sum_{j > g} (-1)^{j+1} j^{m-1} x^j sum_{n>N} n^{-sj},
  // computed as N (x N^-s)^j * bracket to stay in range.  The geometric
  // ratio q = x N^-s is <= 1/4 by choice of N unless the budget was hit.
  double Nd = static_cast<double>(N);
  double q = x * std::pow(Nd, -s);
  double last = 0.0;
  if (q < 0.9) {
    double qj = std::pow(q, g);  // will be advanced to q^{g+1} first
    double invN = 1.0 / Nd, invN2 = invN * invN;
    for (int j = g + 1; j <= 500; ++j) {
      qj *= q;
      double sj = s * j;
      double bracket = 1.0 / (sj - 1.0) - 0.5 * invN + sj * invN2 / 12.0 -
                       sj * (sj + 1.0) * (sj + 2.0) * invN2 * invN2 / 720.0 +
                       sj * (sj + 1.0) * (sj + 2.0) * (sj + 3.0) * (sj + 4.0) *
                           invN2 * invN2 * invN2 / 30240.0;
      double term = (j % 2 ? 1.0 : -1.0) * j_coeff(m, j) * Nd * qj * bracket;
      sum.add(term);
      last = std::abs(term);
      if (last < policy.abs_tol * 1e-4) break;
    }
    res.converged = true;
  } else {
    res.converged = false;
  }
  res.value = sum.value();
  res.error_bound = last + 1e-15 * std::abs(res.value) * std::sqrt(static_cast<double>(N));
  return res;
}

EvalResult eval_W(const ShapeParam& p, double x, const TruncationPolicy& policy) {
  EvalResult lg = dm_logW(p, 0, x, policy);
  EvalResult res = lg;
  res.value = std::exp(lg.value);
  res.error_bound = res.value * lg.error_bound;
  return res;
}

EvalResult eval_F(double s, double x, const TruncationPolicy& policy) {
  policy.validate();
  if (!(s > 1.0)) throw std::domain_error("eval_F: s > 1 required");
  if (!(x > -s)) throw std::domain_error("eval_F: x > -s required");
  KahanSum sum;
  EvalResult res;
  double g = 1.0;
  std::size_t n = 0;
  double tail = 0.0;
  while (n < policy.max_terms) {
    g /= s;
    ++n;
    double f = g * x;
    if (1.0 + f <= 0.0) throw std::domain_error("eval_F: nonpositive factor");
    sum.add(std::log1p(f));
    if (std::abs(f) < policy.abs_tol) {
      tail = f / (s - 1.0);  // sum of the remaining log1p terms to first order
      res.converged = true;
      break;
    }
  }
  res.terms_used = n;
  res.value = std::exp(sum.value() + tail);
  res.error_bound = std::abs(res.value) * (policy.abs_tol * policy.abs_tol + 1e-15 * n);
  return res;
}

EvalResult logderiv_W(const ShapeParam& p, double x, const TruncationPolicy& policy) {
  if (!(p.s > 1.0)) throw std::domain_error("logderiv_W: s > 1 required");
  EvalResult r = dm_logW(p, 1, x, policy);
  r.value /= x;
  r.error_bound /= x;
  return r;
}

EvalResult logderiv_F(double s, double x, const TruncationPolicy& policy) {
  policy.validate();
  if (!(s > 1.0)) throw std::domain_error("logderiv_F: s > 1 required");
  if (!(x > 0.0)) throw std::domain_error("logderiv_F: x > 0 required");
  KahanSum sum;
  EvalResult res;
  double g = 1.0;
  std::size_t n = 0;
  while (n < policy.max_terms) {
    g /= s;
    ++n;
    sum.add(g / (1.0 + g * x));
    if (g < policy.abs_tol) {
      // remaining sum s^-k (1 - s^-k x + ...) summed geometrically
      sum.add(g / (s - 1.0) - x * g * g / (s * s - 1.0));
      res.converged = true;
      break;
    }
  }
  res.terms_used = n;
  res.value = sum.value();
  res.error_bound = policy.abs_tol * policy.abs_tol * std::abs(x) + 1e-15;
  return res;
}

double d_m(const FnEvaluator& f, int m, double x, double h) {
  if (m < 0 || m > 4) throw std::invalid_argument("d_m: 0 <= m <= 4 required");
  if (!(x > 0.0)) throw std::domain_error("d_m: x > 0 required");
  if (m == 0) return f(x);
  if (h <= 0.0) h = std::pow(2.220446049250313e-16, 1.0 / (m + 2));
  double u = std::log(x);
  if (std::exp(u + h) == x) throw std::underflow_error("d_m: step underflow");
  auto F = [&](int k) { return f(std::exp(u + k * h)); };
  switch (m) {
    case 1: return (F(1) - F(-1)) / (2.0 * h);
    case 2: return (F(1) - 2.0 * F(0) + F(-1)) / (h * h);
    case 3: return (F(2) - 2.0 * F(1) + 2.0 * F(-1) - F(-2)) / (2.0 * h * h * h);
    default:
      return (F(2) - 4.0 * F(1) + 6.0 * F(0) - 4.0 * F(-1) + F(-2)) / (h * h * h * h);
  }
}

EvalResult d2_logW_analytic(const ShapeParam& p, double x, const TruncationPolicy& policy) {
  return dm_logW(p, 2, x, policy);
}

EvalResult d3_logW_analytic(const ShapeParam& p, double x, const TruncationPolicy& policy) {
  return dm_logW(p, 3, x, policy);
}

}  // namespace canprod
