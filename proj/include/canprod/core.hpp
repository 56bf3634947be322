#pragma once

#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace canprod {

enum class TailMode { none, integral_tail, euler_maclaurin };

// Truncation controls shared by every infinite sum/product in the library.
struct TruncationPolicy {
  std::size_t max_terms = 2'000'000;
  double abs_tol = 1e-12;
  double rel_tol = 1e-10;
  TailMode tail_mode = TailMode::euler_maclaurin;

  void validate() const {
    if (max_terms < 1) throw std::invalid_argument("TruncationPolicy: max_terms >= 1 required");
    if (!(abs_tol > 0.0) || !(rel_tol > 0.0))
      throw std::invalid_argument("TruncationPolicy: tolerances must be strictly positive");
  }
};

struct EvalResult {
  double value = 0.0;
  double error_bound = std::numeric_limits<double>::infinity();
  std::size_t terms_used = 0;
  bool converged = false;
};

// Compensated accumulator.
class KahanSum {
 public:
  void add(double x) {
    double y = x - comp_;
    double t = sum_ + y;
    comp_ = (t - sum_) - y;
    sum_ = t;
  }
  double value() const { return sum_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

// Sorted finite list of pairwise-distinct reals.
struct DiscretePointSet {
  std::vector<double> points;

  DiscretePointSet() = default;
  explicit DiscretePointSet(std::vector<double> pts) : points(std::move(pts)) { validate(); }

  void validate() const {
    for (std::size_t i = 1; i < points.size(); ++i)
      if (!(points[i - 1] < points[i]))
        throw std::invalid_argument("DiscretePointSet: points must be strictly increasing");
  }
  std::size_t size() const { return points.size(); }
};

enum class ProbeKind { converged, diverged, oscillating, inconclusive };

struct ProbeVerdict {
  ProbeKind kind = ProbeKind::inconclusive;
  std::optional<double> value;            // present iff kind == converged
  std::vector<std::pair<double, double>> trace;  // (t, sample)
};

// Callable with an attached policy and validity interval.
struct FnEvaluator {
  std::function<double(double)> fn;
  TruncationPolicy policy{};
  double lo = 0.0;
  double hi = std::numeric_limits<double>::infinity();

  double operator()(double x) const {
    if (!(x >= lo) || !(x <= hi)) throw std::domain_error("FnEvaluator: argument outside validity interval");
    return fn(x);
  }
};

}  // namespace canprod
