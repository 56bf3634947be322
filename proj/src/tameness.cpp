#include "canprod/tameness.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "canprod/decomposition.hpp"
#include "canprod/special.hpp"

namespace canprod {

namespace {
constexpr double kPi = std::numbers::pi;

// Greedy left-to-right covering with intervals of length 2r (optimal in 1-D).
std::size_t covering_count(const std::vector<double>& pts, std::size_t lo, std::size_t hi,
                           double r) {
  std::size_t count = 0, i = lo;
  while (i < hi) {
    double right = pts[i] + 2.0 * r;
    ++count;
    while (i < hi && pts[i] <= right) ++i;
  }
  return count;
}

void check_schedule(const std::vector<double>& t) {
  if (t.size() < 8) throw std::invalid_argument("probe: schedule length >= 8 required");
  for (std::size_t i = 1; i < t.size(); ++i)
    if (!(t[i] > t[i - 1])) throw std::invalid_argument("probe: schedule must be increasing");
}

struct TailStats {
  double spread4 = 0.0;   // max-min over last 4 samples (relative)
  double spread_half = 0.0;  // over last half (relative)
  double mean4 = 0.0;
};

TailStats tail_stats(const std::vector<std::pair<double, double>>& trace) {
  TailStats st;
  std::size_t n = trace.size();
  auto span = [&](std::size_t from) {
    double lo = trace[from].second, hi = lo;
    for (std::size_t i = from; i < n; ++i) {
      lo = std::min(lo, trace[i].second);
      hi = std::max(hi, trace[i].second);
    }
    return std::pair<double, double>(lo, hi);
  };
  auto [l4, h4] = span(n - 4);
  auto [lh, hh] = span(n / 2);
  for (std::size_t i = n - 4; i < n; ++i) st.mean4 += trace[i].second;
  st.mean4 /= 4.0;
  double scale = std::max(1.0, std::abs(st.mean4));
  st.spread4 = (h4 - l4) / scale;
  st.spread_half = (hh - lh) / scale;
  return st;
}

ProbeVerdict classify(std::vector<std::pair<double, double>> trace, const ProbeThresholds& th) {
  ProbeVerdict v;
  v.trace = std::move(trace);
  TailStats st = tail_stats(v.trace);
  if (st.spread4 < th.converge) {
    v.kind = ProbeKind::converged;
    v.value = st.mean4;
  } else if (st.spread_half > th.oscillate) {
    v.kind = ProbeKind::oscillating;
  } else {
    v.kind = ProbeKind::inconclusive;
  }
  return v;
}

}  // namespace

std::vector<double> assouad_default_R_grid(const DiscretePointSet& X) {
  double span = X.points.back() - X.points.front();
  std::vector<double> grid;
  for (int j = 1; j <= 16; ++j) grid.push_back(span / std::pow(2.0, j));
  return grid;
}

std::vector<double> assouad_default_ratios() { return {4.0, 16.0, 64.0, 256.0}; }

double assouad_zero_estimate(const DiscretePointSet& X, const std::vector<double>& R_grid,
                             const std::vector<double>& r_ratios) {
  if (X.size() < 2) throw std::invalid_argument("assouad: |X| >= 2 required");
  for (double rho : r_ratios)
    if (!(rho > 1.0)) throw std::invalid_argument("assouad: ratios must exceed 1");
  const std::vector<double>& pts = X.points;
  double best = 0.0;
  bool any_window = false;
  for (double x : pts) {
    for (double R : R_grid) {
      if (!(R > 0.0)) throw std::invalid_argument("assouad: R > 0 required");
      auto lo = std::lower_bound(pts.begin(), pts.end(), x - R);
      auto hi = std::upper_bound(pts.begin(), pts.end(), x + R);
      // open window (x-R, x+R)
      while (lo != hi && *lo <= x - R) ++lo;
      while (hi != lo && *(hi - 1) >= x + R) --hi;
      std::size_t a = static_cast<std::size_t>(lo - pts.begin());
      std::size_t b = static_cast<std::size_t>(hi - pts.begin());
      if (b - a > 1) any_window = true;
      for (double rho : r_ratios) {
        double r = R / rho;
        std::size_t N = covering_count(pts, a, b, r);
        if (N > 1) best = std::max(best, std::log(static_cast<double>(N)) / std::log(rho));
      }
    }
  }
  if (!any_window) throw std::runtime_error("assouad: degenerate input (no populated window)");
  return std::min(best, 1.0);
}

double assouad_zero_estimate(const DiscretePointSet& X) {
  return assouad_zero_estimate(X, assouad_default_R_grid(X), assouad_default_ratios());
}

ProbeVerdict power_probe(const FnEvaluator& f, double y, const std::vector<double>& t_schedule,
                         const ProbeThresholds& th) {
  if (!(y > 0.0) || std::abs(std::log(y)) < 1e-12)
    throw std::invalid_argument("power_probe: y > 0, y != 1 required");
  check_schedule(t_schedule);
  std::vector<std::pair<double, double>> trace;
  for (double t : t_schedule) {
    double num = f(y * t), den = f(t);
    if (!(num > 0.0) || !(den > 0.0))
      throw std::domain_error("power_probe: f must be positive on the schedule");
    trace.emplace_back(t, std::log(num / den) / std::log(y));
  }
  return classify(std::move(trace), th);
}

ProbeVerdict log_probe(const FnEvaluator& f, int m, double y, const std::vector<double>& t_schedule,
                       const ProbeThresholds& th) {
  if (m < 1) throw std::invalid_argument("log_probe: m >= 1 required");
  if (!(y > 0.0)) throw std::invalid_argument("log_probe: y > 0 required");
  check_schedule(t_schedule);
  // Least squares for f(x)/x^m = sum_j beta_j x^{j-m} + c log x on a log grid
  // spanning the schedule (basis columns scaled to unit norm).
  double lo = t_schedule.front(), hi = t_schedule.back() * std::max(1.0, y);
  const int npts = 48, dim = m + 2;
  std::vector<std::vector<double>> A(npts, std::vector<double>(dim));
  std::vector<double> rhs(npts);
  for (int i = 0; i < npts; ++i) {
    double x = lo * std::pow(hi / lo, i / static_cast<double>(npts - 1));
    for (int j = 0; j <= m; ++j) A[i][j] = std::pow(x, j - m);
    A[i][m + 1] = std::log(x);
    rhs[i] = f(x) / std::pow(x, m);
  }
  std::vector<double> scale(dim, 0.0);
  for (int j = 0; j < dim; ++j) {
    for (int i = 0; i < npts; ++i) scale[j] += A[i][j] * A[i][j];
    scale[j] = std::sqrt(scale[j]);
    if (scale[j] == 0.0) throw std::runtime_error("log_probe: degenerate fit basis");
    for (int i = 0; i < npts; ++i) A[i][j] /= scale[j];
  }
  // normal equations, Gaussian elimination with partial pivoting
  std::vector<std::vector<double>> M(dim, std::vector<double>(dim + 1, 0.0));
  for (int a = 0; a < dim; ++a) {
    for (int b = 0; b < dim; ++b)
      for (int i = 0; i < npts; ++i) M[a][b] += A[i][a] * A[i][b];
    for (int i = 0; i < npts; ++i) M[a][dim] += A[i][a] * rhs[i];
  }
  for (int col = 0; col < dim; ++col) {
    int piv = col;
    for (int r = col + 1; r < dim; ++r)
      if (std::abs(M[r][col]) > std::abs(M[piv][col])) piv = r;
    if (std::abs(M[piv][col]) < 1e-12) throw std::runtime_error("log_probe: ill-conditioned fit");
    std::swap(M[col], M[piv]);
    for (int r = 0; r < dim; ++r) {
      if (r == col) continue;
      double fac = M[r][col] / M[col][col];
      for (int cc = col; cc <= dim; ++cc) M[r][cc] -= fac * M[col][cc];
    }
  }
  std::vector<double> beta(dim);
  for (int j = 0; j < dim; ++j) beta[j] = M[j][dim] / M[j][j] / scale[j];
  double c = beta[m + 1];
  if (std::abs(c) < 1e-12) throw std::runtime_error("log_probe: degenerate fit (c ~ 0)");
  auto gfun = [&](double x) {
    double p = 0.0;
    for (int j = 0; j <= m; ++j) p += beta[j] * std::pow(x, j);
    return (f(x) - p) / (c * std::pow(x, m));
  };
  std::vector<std::pair<double, double>> trace;
  for (double t : t_schedule) trace.emplace_back(t, gfun(y * t) - gfun(t));
  return classify(std::move(trace), th);
}

ProbeVerdict stirling_exp_probe(double x, const std::vector<double>& t_schedule,
                                const ProbeThresholds& th) {
  check_schedule(t_schedule);
  const double e = std::numbers::e;
  std::vector<std::pair<double, double>> trace;
  for (double t : t_schedule) {
    if (!(t > 0.0) || !(x + t > 0.0) || !(x + e * t > 0.0))
      throw std::domain_error("stirling_exp_probe: gamma arguments must stay positive");
    double v = std::exp(log_gamma(x + e * t) + log_gamma(t) - log_gamma(e * t) - log_gamma(x + t));
    trace.emplace_back(t, v);
  }
  return classify(std::move(trace), th);
}

double ratio_extract(const DiscretePointSet& X, std::size_t tail) {
  if (tail < 1 || X.size() < tail + 1)
    throw std::invalid_argument("ratio_extract: need at least tail + 1 points");
  if (X.points.front() <= 0.0) throw std::domain_error("ratio_extract: points must be positive");
  std::vector<double> ratios;
  std::size_t n = X.size();
  for (std::size_t i = n - tail; i < n; ++i) ratios.push_back(X.points[i] / X.points[i - 1]);
  std::size_t mid = ratios.size() / 2;
  std::nth_element(ratios.begin(), ratios.begin() + mid, ratios.end());
  double med = ratios[mid];
  if (ratios.size() % 2 == 0) {
    double lo = *std::max_element(ratios.begin(), ratios.begin() + mid);
    med = 0.5 * (med + lo);
  }
  return med;
}

OmegaZeroDensity omega_zero_density(const ShapeParam& p, double x_lo, double x_hi) {
  double s = p.s;
  if (!(s > 2.0) || p.class_4n2)
    throw std::domain_error("omega_zero_density: s > 2 with s not in 4N+2 required");
  if (!(0.0 < x_lo) || !(x_lo < x_hi))
    throw std::invalid_argument("omega_zero_density: 0 < x_lo < x_hi required");
  OmegaZeroDensity out;
  double cth = std::cos(kPi / s);
  auto model_arg = [&](double x) { return std::pow(x, 1.0 / s) * 2.0 * kPi * cth + kPi / s; };
  double a1 = model_arg(x_lo), a2 = model_arg(x_hi);
  out.count_model = static_cast<long>(std::floor(a2 / kPi)) -
                    static_cast<long>(std::ceil(a1 / kPi)) + 1;
  if (out.count_model < 0) out.count_model = 0;

  ThetaSet thetas(s);
  double th_min = thetas.angles.front();
  auto rescaled = [&](double x) {
    // x * omega, divided by the dominant decay exp(-x^{1/s} 2 pi sin(th_min))
    double xr = std::pow(x, 1.0 / s);
    double lambda = xr * 2.0 * kPi * std::sin(th_min);
    double acc = 0.0;
    for (double th : thetas.angles) {
      double alpha = xr * 2.0 * kPi * std::cos(th), beta = xr * 2.0 * kPi * std::sin(th);
      for (int n = 1; n <= 200; ++n) {
        double damp = std::exp(lambda - beta * n);
        if (damp < 1e-30) break;
        acc += std::sin(alpha * n + th) * damp;
      }
    }
    return 4.0 * kPi / s * xr * acc;
  };
  std::size_t npts = static_cast<std::size_t>(std::max<long>(512, out.count_model * 128));
  std::vector<double> vals(npts);
  double maxabs = 0.0;
  for (std::size_t i = 0; i < npts; ++i) {
    double x = x_lo + (x_hi - x_lo) * i / static_cast<double>(npts - 1);
    vals[i] = rescaled(x);
    maxabs = std::max(maxabs, std::abs(vals[i]));
  }
  out.flat_warning = maxabs < 1e-250;
  long changes = 0;
  double prev = 0.0;
  bool have_prev = false;
  for (std::size_t i = 1; i + 1 < npts; ++i) {
    double dv = vals[i + 1] - vals[i - 1];
    if (have_prev && prev * dv < 0.0) ++changes;
    if (dv != 0.0) {
      prev = dv;
      have_prev = true;
    }
  }
  out.count_actual = changes;
  return out;
}

FastSequenceReport fast_sequence_check(const DiscretePointSet& a, double eps, int k_lo, int k_hi) {
  if (!(eps > 0.0) || !(eps < 0.5))
    throw std::invalid_argument("fast_sequence_check: eps in (0, 1/2) required");
  std::size_t n = a.size();
  if (n < 2) throw std::invalid_argument("fast_sequence_check: need at least 2 terms");
  if (k_lo < 1 || k_hi < k_lo || static_cast<std::size_t>(k_hi) + 1 > n)
    throw std::invalid_argument("fast_sequence_check: k_range must fit within |a| - 1");
  if (a.points.front() <= 0.0)
    throw std::domain_error("fast_sequence_check: terms must be positive");
  FastSequenceReport rep;
  rep.min_ratio = std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i < n; ++i)
    rep.min_ratio = std::min(rep.min_ratio, a.points[i] / a.points[i - 1]);
  if (rep.min_ratio < 100.0)
    throw std::invalid_argument("fast_sequence_check: consecutive ratios >= 100 required");

  auto f = [&](double x) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += x / (x + a.points[i]);
    return acc;
  };
  auto d3 = [&](double x) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double y = x / a.points[i];
      double u = 1.0 + y;
      acc += y * (1.0 - y) / (u * u * u);
    }
    return acc;
  };

  for (int k = k_lo; k <= k_hi; ++k) {
    double ak = a.points[k - 1], ak1 = a.points[k];
    double S = 0.0;
    for (int i = 0; i < k; ++i) S += 1.0 / (1.0 + a.points[i] / ak);
    if (k == 1) {
      rep.k1_boundary_equality = std::abs(S - 0.5) < 1e-12;
    } else if (!(S > k / 2.0) || !(S < k * (1.0 + a.points[0] / ak))) {
      rep.sandwich_failures.push_back(k);
    }
    bool map_ok = true, mono_ok = true;
    double prev_f = -std::numeric_limits<double>::infinity();
    // Sample the lower part of the gap: near its right end f climbs to
    // k + 1/2, which exceeds (1+eps)k whenever k < 1/(2 eps) -- the image
    // claim is asymptotic in k and sharp only away from a_{k+1}.
    for (int j = 1; j <= 9; ++j) {
      double t = 0.05 + 0.5 * (j - 1) / 8.0;
      double x = ak * std::pow(ak1 / ak, t);
      double v = f(x);
      if (!(v > (0.5 - eps) * k) || !(v < (1.0 + eps) * k)) map_ok = false;
      if (!(v > prev_f)) mono_ok = false;
      prev_f = v;
    }
    if (!map_ok) rep.map_failures.push_back(k);
    if (!mono_ok) rep.monotone_failures.push_back(k);
    bool sign_change = false;
    double prev_d3 = d3(ak * std::pow(ak1 / ak, 1.0 / 129.0));
    for (int j = 2; j < 129; ++j) {
      double x = ak * std::pow(ak1 / ak, j / 129.0);
      double v = d3(x);
      if (prev_d3 * v < 0.0) sign_change = true;
      prev_d3 = v;
    }
    if (sign_change) rep.d3_sign_change_ks.push_back(k);
  }
  for (int k = k_hi; k >= k_lo; --k) {
    bool found = std::find(rep.d3_sign_change_ks.begin(), rep.d3_sign_change_ks.end(), k) !=
                 rep.d3_sign_change_ks.end();
    if (found) rep.d3_threshold = k;
    else break;
  }
  rep.passed = rep.sandwich_failures.empty() && rep.map_failures.empty() &&
               rep.monotone_failures.empty() && rep.d3_threshold != -1;
  return rep;
}

}  // namespace canprod
