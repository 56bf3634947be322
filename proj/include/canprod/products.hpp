#pragma once

#include <optional>

#include "canprod/core.hpp"

namespace canprod {

// Validated s > 0 together with its discrete arithmetic classification.
struct ShapeParam {
  double s = 1.0;
  std::optional<int> recip_integer;  // set iff 1/s is a positive integer
  bool class_2n4 = false;            // s in {4, 6, 8, ...}
  bool class_4n2 = false;            // s in {2, 6, 10, ...}
  int genus = 0;                     // floor(1/s)

  explicit ShapeParam(double s_value);
};

// Termwise (x d/dx)^m of log W_s; m = 0 gives log W_s itself.  Handles every
// genus: direct sum of the m-th derivative of [log(1+y) - genus corrections]
// to N with x/N^s <= 1/4, then the alternating power-series tail in
// sum_{n>N} n^{-sj}.
EvalResult dm_logW(const ShapeParam& p, int m, double x, const TruncationPolicy& policy = {});

EvalResult eval_W(const ShapeParam& p, double x, const TruncationPolicy& policy = {});
EvalResult eval_F(double s, double x, const TruncationPolicy& policy = {});

// W_s'/W_s = sum 1/(x + n^s), s > 1 only.
EvalResult logderiv_W(const ShapeParam& p, double x, const TruncationPolicy& policy = {});
// F_s'/F_s = sum s^-n/(1 + s^-n x).
EvalResult logderiv_F(double s, double x, const TruncationPolicy& policy = {});

// Numerical (x d/dx)^m via central differences in u = log x, 0 <= m <= 4.
double d_m(const FnEvaluator& f, int m, double x, double h = 0.0);

EvalResult d2_logW_analytic(const ShapeParam& p, double x, const TruncationPolicy& policy = {});
EvalResult d3_logW_analytic(const ShapeParam& p, double x, const TruncationPolicy& policy = {});

}  // namespace canprod
