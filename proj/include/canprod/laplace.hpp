#pragma once

#include <complex>

#include "canprod/core.hpp"

namespace canprod {

using ComplexPoint = std::complex<double>;

struct PipelineConfig {
  int quad_panels = 4;      // panel subdivisions for the g/f quadratures
  int n_max = 400;          // truncation of the h-series
  double laplace_cut = 40.0;  // upper limit surrogate for the Laplace integral

  void validate() const;
};

// Q_s(w) = 1/(w^2 + 2 cos(pi s/2) w + 1), s in (1,2); poles at e^{i pi(1 +/- s/2)}.
ComplexPoint Q(double s, ComplexPoint w);

// g_s(z) = z * int_0^1 Q_s(t z) dt (path integral of Q_s from 0 to z).
ComplexPoint g(double s, ComplexPoint z, const PipelineConfig& cfg = {});
double g_real(double s, double z, const PipelineConfig& cfg = {});

// h_s(z) = sum_{n>0} g_s(z/(2 pi n)^s)/(2 pi n), with the zeta(1+s) tail bound.
ComplexPoint h(double s, ComplexPoint z, const PipelineConfig& cfg = {});
double h_real(double s, double z, const PipelineConfig& cfg = {});

// f_s(z) = int_0^inf h_s(t^s) e^{-t z} dt for real z > 0.
double f(double s, double z, const PipelineConfig& cfg = {});

// Phi_s(x) = -2 sin(s pi/2) x^{1/s} f_s(x^{1/s}); Phi_s' = phi_s.
double Phi(double s, double x, const PipelineConfig& cfg = {});

// c_s = log W_s(1) - pi csc(pi/s) + 2 sin(s pi/2) f_s(1); cached per s.
double c_constant(double s, const PipelineConfig& cfg = {});

// log W_s = pi csc(pi/s) x^{1/s} - (log x)/2 + Phi_s + c_s.
EvalResult logW_decomposed(double s, double x, const PipelineConfig& cfg = {});

}  // namespace canprod
