#pragma once

#include <functional>
#include <vector>

namespace canprod {

// Gauss-Legendre rule on [-1, 1]; nodes/weights generated once per order
// (Newton on the Legendre recurrence) and cached.
struct GaussLegendre {
  std::vector<double> nodes;
  std::vector<double> weights;
};

const GaussLegendre& gauss_legendre(int n);

double integrate_gl(const std::function<double(double)>& f, double a, double b, int n);

// Sum of fixed-order rules over consecutive panels given by breakpoints.
double integrate_panels(const std::function<double(double)>& f,
                        const std::vector<double>& breaks, int n);

}  // namespace canprod
