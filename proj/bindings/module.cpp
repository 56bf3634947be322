#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "canprod/decomposition.hpp"
#include "canprod/laplace.hpp"
#include "canprod/littlewood.hpp"
#include "canprod/pointset_io.hpp"
#include "canprod/products.hpp"
#include "canprod/special.hpp"
#include "canprod/suites.hpp"
#include "canprod/tameness.hpp"

namespace py = pybind11;
using namespace canprod;

namespace {

const char* probe_kind_name(ProbeKind k) {
  switch (k) {
    case ProbeKind::converged: return "converged";
    case ProbeKind::diverged: return "diverged";
    case ProbeKind::oscillating: return "oscillating";
    default: return "inconclusive";
  }
}

py::dict verdict_dict(const ProbeVerdict& v) {
  py::dict d;
  d["kind"] = probe_kind_name(v.kind);
  d["value"] = v.value ? py::object(py::float_(*v.value)) : py::none();
  d["trace"] = v.trace;
  return d;
}

}  // namespace

PYBIND11_MODULE(_canprod, m) {
  m.doc() = "canonical-product numerical laboratory (C++ core)";

  py::class_<TruncationPolicy>(m, "TruncationPolicy")
      .def(py::init<>())
      .def_readwrite("max_terms", &TruncationPolicy::max_terms)
      .def_readwrite("abs_tol", &TruncationPolicy::abs_tol)
      .def_readwrite("rel_tol", &TruncationPolicy::rel_tol);

  py::class_<EvalResult>(m, "EvalResult")
      .def_readonly("value", &EvalResult::value)
      .def_readonly("error_bound", &EvalResult::error_bound)
      .def_readonly("terms_used", &EvalResult::terms_used)
      .def_readonly("converged", &EvalResult::converged)
      .def("__float__", [](const EvalResult& r) { return r.value; })
      .def("__repr__", [](const EvalResult& r) {
        return "EvalResult(value=" + format_number(r.value) + ", converged=" +
               (r.converged ? std::string("True") : std::string("False")) + ")";
      });

  py::class_<DiscretePointSet>(m, "DiscretePointSet")
      .def(py::init<std::vector<double>>())
      .def_readonly("points", &DiscretePointSet::points)
      .def("__len__", &DiscretePointSet::size);

  py::class_<ShapeParam>(m, "ShapeParam")
      .def(py::init<double>())
      .def_readonly("s", &ShapeParam::s)
      .def_readonly("genus", &ShapeParam::genus)
      .def_readonly("class_2n4", &ShapeParam::class_2n4)
      .def_readonly("class_4n2", &ShapeParam::class_4n2);

  // special functions
  m.def("log_gamma", &log_gamma, py::arg("x"));
  m.def("zeta_pos", [](double x) { return zeta_pos(x); }, py::arg("x"));
  m.def("zeta_neg", &zeta_neg, py::arg("t"));
  m.def("euler_gamma", &euler_gamma);

  // canonical products
  auto pol = [](double tol) {
    TruncationPolicy p;
    if (tol > 0) { p.abs_tol = tol; p.rel_tol = tol; }
    return p;
  };
  m.def("eval_W", [pol](double s, double x, double tol) { return eval_W(ShapeParam(s), x, pol(tol)); },
        py::arg("s"), py::arg("x"), py::arg("tol") = 0.0);
  m.def("eval_F", [pol](double s, double x, double tol) { return eval_F(s, x, pol(tol)); },
        py::arg("s"), py::arg("x"), py::arg("tol") = 0.0);
  m.def("dm_logW", [pol](double s, int mm, double x, double tol) { return dm_logW(ShapeParam(s), mm, x, pol(tol)); },
        py::arg("s"), py::arg("m"), py::arg("x"), py::arg("tol") = 0.0);
  m.def("logderiv_W", [pol](double s, double x, double tol) { return logderiv_W(ShapeParam(s), x, pol(tol)); },
        py::arg("s"), py::arg("x"), py::arg("tol") = 0.0);
  m.def("logderiv_F", [pol](double s, double x, double tol) { return logderiv_F(s, x, pol(tol)); },
        py::arg("s"), py::arg("x"), py::arg("tol") = 0.0);
  m.def("d2_logW", [](double s, double x) { return d2_logW_analytic(ShapeParam(s), x); },
        py::arg("s"), py::arg("x"));
  m.def("d3_logW", [](double s, double x) { return d3_logW_analytic(ShapeParam(s), x); },
        py::arg("s"), py::arg("x"));

  // Littlewood expansion
  m.def("logF_littlewood", [](double s, double x) { return logF_littlewood(LittlewoodCoeffs(s), x); },
        py::arg("s"), py::arg("x"));
  m.def("d1_logF", [](double s, double x) { return d1_logF(LittlewoodCoeffs(s), x); },
        py::arg("s"), py::arg("x"));
  m.def("d2_logF", [](double s, double x) { return d2_logF(LittlewoodCoeffs(s), x); },
        py::arg("s"), py::arg("x"));
  m.def("d3_logF", [](double s, double x) { return d3_logF(LittlewoodCoeffs(s), x); },
        py::arg("s"), py::arg("x"));
  m.def(
      "sZ_probe",
      [](double s, double y, std::vector<double> schedule) {
        SzResult r = sZ_probe(LittlewoodCoeffs(s), y, schedule);
        py::dict d;
        d["membership"] = r.membership == SzMembership::member
                              ? "member"
                              : (r.membership == SzMembership::non_member ? "non-member"
                                                                          : "inconclusive");
        d["exponent"] = r.exponent;
        d["probe"] = verdict_dict(r.probe);
        return d;
      },
      py::arg("s"), py::arg("y"), py::arg("schedule"));
  m.def(
      "zeros_d3",
      [](double s, double x_lo, double x_hi) {
        ZeroScan z = zeros_d3(LittlewoodCoeffs(s), x_lo, x_hi);
        py::dict d;
        d["c_points"] = z.c_points.points;
        d["refined_warning"] = z.refined_warning;
        return d;
      },
      py::arg("s"), py::arg("x_lo"), py::arg("x_hi"));

  // exact decomposition of W'/W
  m.def("phi", [](double s, double x) { return phi(ShapeParam(s), x); }, py::arg("s"), py::arg("x"));
  m.def("omega", [](double s, double x) { return omega(ShapeParam(s), x); }, py::arg("s"), py::arg("x"));
  m.def("omega_geometric", [](double s, double x) { return omega_geometric(ShapeParam(s), x); },
        py::arg("s"), py::arg("x"));
  m.def("maincalc_rhs", [](double s, double x) { return maincalc_rhs(ShapeParam(s), x); },
        py::arg("s"), py::arg("x"));
  m.def("poisson_middle", [](double s, double x) { return poisson_middle(ShapeParam(s), x); },
        py::arg("s"), py::arg("x"));
  m.def("asympt_coeff", [](double s, int k) { return asympt_coeff(ShapeParam(s), k); },
        py::arg("s"), py::arg("k"));
  m.def("asympt_eval", [](double s, double x, int K) { return asympt_eval(ShapeParam(s), x, K); },
        py::arg("s"), py::arg("x"), py::arg("K"));
  m.def(
      "gevrey_growth",
      [](double s, int K) {
        GevreyFit fit = gevrey_growth(ShapeParam(s), K);
        py::dict d;
        d["A"] = fit.A;
        d["B"] = fit.B;
        d["max_residual"] = fit.max_residual;
        d["degenerate"] = fit.degenerate;
        return d;
      },
      py::arg("s"), py::arg("K"));

  // Laplace-transform pipeline (s in (1,2))
  m.def("Q", [](double s, ComplexPoint w) { return Q(s, w); }, py::arg("s"), py::arg("w"));
  m.def("g_real", [](double s, double z) { return g_real(s, z); }, py::arg("s"), py::arg("z"));
  m.def("h_real", [](double s, double z) { return h_real(s, z); }, py::arg("s"), py::arg("z"));
  m.def("f", [](double s, double z) { return f(s, z); }, py::arg("s"), py::arg("z"));
  m.def("Phi", [](double s, double x) { return Phi(s, x); }, py::arg("s"), py::arg("x"));
  m.def("c_constant", [](double s) { return c_constant(s); }, py::arg("s"));
  m.def("logW_decomposed", [](double s, double x) { return logW_decomposed(s, x); },
        py::arg("s"), py::arg("x"));

  // tameness toolkit
  m.def("assouad_zero_estimate",
        [](std::vector<double> pts) { return assouad_zero_estimate(DiscretePointSet(std::move(pts))); },
        py::arg("points"));
  m.def("ratio_extract",
        [](std::vector<double> pts, std::size_t tail) {
          return ratio_extract(DiscretePointSet(std::move(pts)), tail);
        },
        py::arg("points"), py::arg("tail"));
  m.def(
      "power_probe",
      [](std::function<double(double)> fn, double y, std::vector<double> schedule) {
        FnEvaluator f{std::move(fn), {}, -std::numeric_limits<double>::infinity(),
                      std::numeric_limits<double>::infinity()};
        return verdict_dict(power_probe(f, y, schedule));
      },
      py::arg("fn"), py::arg("y"), py::arg("schedule"));
  m.def(
      "log_probe",
      [](std::function<double(double)> fn, int mm, double y, std::vector<double> schedule) {
        FnEvaluator f{std::move(fn), {}, -std::numeric_limits<double>::infinity(),
                      std::numeric_limits<double>::infinity()};
        return verdict_dict(log_probe(f, mm, y, schedule));
      },
      py::arg("fn"), py::arg("m"), py::arg("y"), py::arg("schedule"));
  m.def(
      "stirling_exp_probe",
      [](double x, std::vector<double> schedule) {
        return verdict_dict(stirling_exp_probe(x, schedule));
      },
      py::arg("x"), py::arg("schedule"));
  m.def(
      "omega_zero_density",
      [](double s, double x_lo, double x_hi) {
        OmegaZeroDensity d = omega_zero_density(ShapeParam(s), x_lo, x_hi);
        py::dict out;
        out["count_actual"] = d.count_actual;
        out["count_model"] = d.count_model;
        out["flat_warning"] = d.flat_warning;
        return out;
      },
      py::arg("s"), py::arg("x_lo"), py::arg("x_hi"));
  m.def(
      "fast_sequence_check",
      [](std::vector<double> pts, double eps, int k_lo, int k_hi) {
        FastSequenceReport r =
            fast_sequence_check(DiscretePointSet(std::move(pts)), eps, k_lo, k_hi);
        py::dict d;
        d["min_ratio"] = r.min_ratio;
        d["sandwich_failures"] = r.sandwich_failures;
        d["map_failures"] = r.map_failures;
        d["monotone_failures"] = r.monotone_failures;
        d["d3_sign_change_ks"] = r.d3_sign_change_ks;
        d["d3_threshold"] = r.d3_threshold;
        d["k1_boundary_equality"] = r.k1_boundary_equality;
        d["passed"] = r.passed;
        return d;
      },
      py::arg("points"), py::arg("eps"), py::arg("k_lo"), py::arg("k_hi"));

  // verification batteries
  m.def("suite_names", []() { return suite_names(); });
  m.def(
      "run_suite",
      [](const std::string& name) {
        SuiteResult r = run_suite(name);
        py::dict d;
        d["name"] = r.name;
        d["cases"] = r.cases;
        d["failures"] = r.failures;
        d["max_residual"] = r.max_residual;
        d["pass"] = r.pass;
        d["detail"] = r.detail;
        return d;
      },
      py::arg("name"));
}
