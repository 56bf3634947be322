#pragma once

#include <utility>
#include <vector>

#include "canprod/core.hpp"
#include "canprod/products.hpp"

namespace canprod {

// Angles 0 < theta < pi/2 with cos(s*theta) = -1: theta_j = (2j+1) pi / s.
struct ThetaSet {
  double s;
  std::vector<double> angles;

  explicit ThetaSet(double s_value);
};

// phi_s(x) = 2 sin(s pi/2) sum_n int_0^inf t^s e^{-2 pi n t} / D(t) dt,
// D(t) = x^2 + 2 cos(s pi/2) t^s x + t^{2s}; exactly 0 for even integer s.
// The n-sum beyond the explicit terms is folded into one extra integral via
// the geometric sum of the exponentials.
EvalResult phi(const ShapeParam& p, double x, const TruncationPolicy& policy = {});

// omega_s as the double sum over (n, theta); exactly 0 when ThetaSet is empty.
EvalResult omega(const ShapeParam& p, double x, const TruncationPolicy& policy = {});
// Same quantity with the n-sum done in closed (geometric) form per angle.
EvalResult omega_geometric(const ShapeParam& p, double x, const TruncationPolicy& policy = {});

// W_s'/W_s via Poisson summation: leading csc term - 1/(2x) plus oscillatory
// cosine-transform integrals (independent of the phi/omega route).
EvalResult poisson_middle(const ShapeParam& p, double x, const TruncationPolicy& policy = {});

// Right side of the exact decomposition of W_s'/W_s, with the discrete
// correction term for s in {2, 6, 10, ...}.
EvalResult maincalc_rhs(const ShapeParam& p, double x, const TruncationPolicy& policy = {});

// Both forms of the k-th asymptotic coefficient:
//   (-1)^{k+1} zeta(-sk)/k   and
//   2 (-1)^k sin(k pi s/2) Gamma(1+sk) zeta(1+sk) / (k (2 pi)^{1+sk}).
std::pair<double, double> asympt_coeff(const ShapeParam& p, int k);

// Partial sum sum_{k<=K} (-1)^{k+1} zeta(-sk) x^-k / k with the
// first-omitted-term heuristic bound; converged=false if the terms are not
// yet decreasing at order K.
EvalResult asympt_eval(const ShapeParam& p, double x, int K);

struct GevreyFit {
  double A = 0.0;
  double B = 0.0;
  double max_residual = 0.0;
  bool degenerate = false;
};

// Least-squares fit |c_k| ~ A B^k (k!)^s for c_k = zeta(-sk)/k, k <= K.
GevreyFit gevrey_growth(const ShapeParam& p, int K);

}  // namespace canprod
