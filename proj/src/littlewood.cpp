#include "canprod/littlewood.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace canprod {

LittlewoodCoeffs::LittlewoodCoeffs(double s_value, const TruncationPolicy& pol)
    : s(s_value), L(std::log(s_value)), M_osc(0), policy(pol) {
  policy.validate();
  if (!(s > 1.0)) throw std::invalid_argument("LittlewoodCoeffs: s > 1 required");
  for (std::size_t m = 1; m <= 4096; ++m) {
    double arg = 2.0 * std::numbers::pi * std::numbers::pi * static_cast<double>(m) / L;
    double bm = (arg > 745.0) ? 0.0 : 1.0 / std::sinh(arg);
    b.push_back(bm);
    M_osc = m;
    if (bm * static_cast<double>(m) * static_cast<double>(m) < 1e-16) break;
  }
}

double LittlewoodCoeffs::a(int m) const {
  return (m % 2 ? -1.0 : 1.0) / (1.0 - std::pow(s, -m));
}

std::size_t LittlewoodCoeffs::m_poly(double x) const {
  double bound = policy.abs_tol * (1.0 - 1.0 / x) * (s - 1.0) / s;
  double M = std::ceil(-std::log(bound) / std::log(x));
  if (!(M > 1.0)) M = 1.0;
  return std::min(static_cast<std::size_t>(M), policy.max_terms);
}

namespace {

// Shared assembly: k is the power of m weighting the a- and b-sums
// (k = 0,1,2 for d1,d2,d3; logF uses 1/m weights and its own branch).
struct Sums {
  double a_sum = 0.0;  // sum a_m m^k x^-m   (or a_m x^-m / m for logF)
  double b_cos = 0.0;  // sum b_m m^k cos(m theta)
  double b_sin = 0.0;  // sum b_m m^k sin(m theta)
  std::size_t terms = 0;
  double last = 0.0;
};

Sums accumulate(const LittlewoodCoeffs& c, double x, int k, bool log_weights) {
  if (!(x > 1.0)) throw std::domain_error("littlewood: x > 1 required");
  Sums out;
  double theta = 2.0 * std::numbers::pi * std::log(x) / c.L;
  double invx = 1.0 / x, xm = 1.0;
  double abound = c.s / (c.s - 1.0);
  KahanSum asum;
  std::size_t cap = std::max<std::size_t>(c.m_poly(x) + 8, 32);
  cap = std::min(cap * (k + 1), c.policy.max_terms);
  for (std::size_t m = 1; m <= cap; ++m) {
    xm *= invx;
    double w = log_weights ? 1.0 / static_cast<double>(m)
                           : std::pow(static_cast<double>(m), k);
    double term = c.a(static_cast<int>(m)) * xm * w;
    asum.add(term);
    out.last = std::abs(term);
    if (abound * xm * w < c.policy.abs_tol * 1e-2 && m >= 4) break;
    out.terms = m;
  }
  out.a_sum = asum.value();
  KahanSum bc, bs;
  for (std::size_t m = 1; m <= c.M_osc; ++m) {
    double w = log_weights ? 1.0 / static_cast<double>(m)
                           : std::pow(static_cast<double>(m), k);
    double ph = static_cast<double>(m) * theta;
    bc.add(c.b[m - 1] * w * std::cos(ph));
    bs.add(c.b[m - 1] * w * std::sin(ph));
  }
  out.b_cos = bc.value();
  out.b_sin = bs.value();
  return out;
}

EvalResult finish(const Sums& s, double value) {
  EvalResult r;
  r.value = value;
  r.terms_used = s.terms;
  r.error_bound = s.last + 1e-15 * (1.0 + std::abs(value));
  r.converged = true;
  return r;
}

}  // namespace

EvalResult logF_littlewood(const LittlewoodCoeffs& c, double x) {
  Sums s = accumulate(c, x, 0, /*log_weights=*/true);
  double T = std::log(x);
  double pi = std::numbers::pi;
  double v = T * T / (2.0 * c.L) - T / 2.0 + pi * pi / (6.0 * c.L) + c.L / 12.0 +
             s.a_sum - s.b_cos;
  return finish(s, v);
}

EvalResult d1_logF(const LittlewoodCoeffs& c, double x) {
  Sums s = accumulate(c, x, 0, false);
  double pi = std::numbers::pi;
  double v = std::log(x) / c.L - 0.5 - s.a_sum + (2.0 * pi / c.L) * s.b_sin;
  return finish(s, v);
}

EvalResult d2_logF(const LittlewoodCoeffs& c, double x) {
  Sums s = accumulate(c, x, 1, false);
  double pi = std::numbers::pi;
  double v = 1.0 / c.L + s.a_sum + (4.0 * pi * pi / (c.L * c.L)) * s.b_cos;
  return finish(s, v);
}

EvalResult d3_logF(const LittlewoodCoeffs& c, double x) {
  Sums s = accumulate(c, x, 2, false);
  double pi = std::numbers::pi;
  double v = -s.a_sum - (8.0 * pi * pi * pi / (c.L * c.L * c.L)) * s.b_sin;
  return finish(s, v);
}

SzResult sZ_probe(const LittlewoodCoeffs& c, double y, const std::vector<double>& t_schedule) {
  if (!(y > 0.0)) throw std::domain_error("sZ_probe: y > 0 required");
  if (t_schedule.size() < 8) throw std::invalid_argument("sZ_probe: schedule length >= 8 required");
  SzResult out;
  for (std::size_t i = 0; i < t_schedule.size(); ++i) {
    double t = t_schedule[i];
    if (i > 0 && !(t > t_schedule[i - 1]))
      throw std::invalid_argument("sZ_probe: schedule must be increasing");
    if (!(t > 1.0) || !(y * t > 1.0))
      throw std::domain_error("sZ_probe: schedule must keep both arguments > 1");
    double d = d1_logF(c, y * t).value - d1_logF(c, t).value;
    out.probe.trace.emplace_back(t, d);
  }
  auto spread = [&](std::size_t from) {
    double lo = out.probe.trace[from].second, hi = lo;
    for (std::size_t i = from; i < out.probe.trace.size(); ++i) {
      lo = std::min(lo, out.probe.trace[i].second);
      hi = std::max(hi, out.probe.trace[i].second);
    }
    return hi - lo;
  };
  std::size_t n = out.probe.trace.size();
  double tail4 = spread(n - 4);
  if (tail4 < 1e-3) {
    double v = 0.0;
    for (std::size_t i = n - 4; i < n; ++i) v += out.probe.trace[i].second;
    v /= 4.0;
    out.probe.kind = ProbeKind::converged;
    out.probe.value = v;
    double k = std::round(v);
    if (std::abs(v - k) < 1e-3) {
      out.membership = SzMembership::member;
      out.exponent = static_cast<int>(k);
    } else {
      // converged to a non-integer: the limit log_s y is not an integer
      out.membership = SzMembership::non_member;
    }
  } else if (spread(n / 2) > 1e-2) {
    out.probe.kind = ProbeKind::oscillating;
    out.membership = SzMembership::non_member;
  } else {
    out.probe.kind = ProbeKind::inconclusive;
    out.membership = SzMembership::inconclusive;
  }
  return out;
}

namespace {

std::vector<double> scan_zeros(const LittlewoodCoeffs& c, double v_lo, double v_hi,
                               std::size_t cells) {
  // v = log_s u; the scanned function is u -> d3 log F_s(u^2), u = s^v.
  auto eval = [&](double v) { return d3_logF(c, std::pow(c.s, 2.0 * v)).value; };
  std::vector<double> zeros;
  double step = (v_hi - v_lo) / static_cast<double>(cells);
  double prev_v = v_lo, prev_f = eval(prev_v);
  for (std::size_t i = 1; i <= cells; ++i) {
    double v = v_lo + step * static_cast<double>(i);
    double f = eval(v);
    if (prev_f == 0.0) zeros.push_back(prev_v);
    else if (prev_f * f < 0.0) {
      double a = prev_v, b = v, fa = prev_f;
      for (int it = 0; it < 200 && (b - a) > 1e-13; ++it) {
        double mid = 0.5 * (a + b);
        double fm = eval(mid);
        if (fa * fm <= 0.0) b = mid;
        else { a = mid; fa = fm; }
      }
      zeros.push_back(0.5 * (a + b));
    }
    prev_v = v;
    prev_f = f;
  }
  return zeros;
}

}  // namespace

ZeroScan zeros_d3(const LittlewoodCoeffs& c, double x_lo, double x_hi) {
  if (!(1.0 <= x_lo) || !(x_lo < x_hi)) throw std::invalid_argument("zeros_d3: 1 <= x_lo < x_hi required");
  ZeroScan out;
  double v_lo = std::log(x_lo) / (2.0 * c.L);
  double v_hi = std::log(x_hi) / (2.0 * c.L);
  std::size_t cells = static_cast<std::size_t>(std::ceil((v_hi - v_lo) * 64.0));
  if (cells < 2) cells = 2;
  if (x_lo <= 1.0 + 1e-12) v_lo += (v_hi - v_lo) / static_cast<double>(cells) * 1e-3;
  std::vector<double> zs = scan_zeros(c, v_lo, v_hi, cells);
  std::vector<double> zs2 = scan_zeros(c, v_lo, v_hi, cells * 2);
  if (zs2.size() != zs.size()) {
    out.refined_warning = true;
    zs = zs2;
  }
  std::vector<double> cs;
  cs.reserve(zs.size());
  for (double v : zs) {
    double z = std::pow(c.s, 2.0 * v);  // zero of d3 log F_s
    cs.push_back(z * z);                // reported as c_k, ratio -> s
  }
  std::sort(cs.begin(), cs.end());
  cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
  out.c_points = DiscretePointSet(std::move(cs));
  return out;
}

}  // namespace canprod
