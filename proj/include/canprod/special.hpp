#pragma once

#include "canprod/core.hpp"

namespace canprod {

// log Gamma(x) for x > 0; relative error <= 1e-13 on [0.5, 1e8].
double log_gamma(double x);

// Riemann zeta on (1, inf): direct summation plus Euler-Maclaurin tail.
EvalResult zeta_pos(double x, const TruncationPolicy& policy = {});

// zeta(-t) for t > 0 via the functional equation; exact 0 at even integers.
double zeta_neg(double t);

// Euler-Mascheroni constant.
double euler_gamma();

namespace detail {
// sum_{n > N} n^{-p}  (Euler-Maclaurin through the 1/30240 term), p > 1.
double zeta_tail(double p, double N);
}  // namespace detail

}  // namespace canprod
