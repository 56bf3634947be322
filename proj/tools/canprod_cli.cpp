// canprod: batch front-end for the canonical-product laboratory.

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "canprod/decomposition.hpp"
#include "canprod/laplace.hpp"
#include "canprod/littlewood.hpp"
#include "canprod/pointset_io.hpp"
#include "canprod/products.hpp"
#include "canprod/special.hpp"
#include "canprod/suites.hpp"
#include "canprod/tameness.hpp"

using nlohmann::json;
using namespace canprod;

namespace {

constexpr const char* kVersion = "0.1.0";

struct Grid {
  double lo = 1.0, hi = 1.0;
  std::size_t count = 1;
  bool log_spaced = true;
  bool auto_count = false;
};

Grid parse_grid(const std::string& text) {
  Grid g;
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ':')) parts.push_back(item);
  if (parts.size() < 3 || parts.size() > 4)
    throw CLI::ValidationError("--grid", "expected lo:hi:count[:log|linear]");
  g.lo = std::stod(parts[0]);
  g.hi = std::stod(parts[1]);
  if (parts[2] == "auto") {
    g.auto_count = true;
  } else {
    long c = std::stol(parts[2]);
    if (c < 1) throw CLI::ValidationError("--grid", "count >= 1 required");
    g.count = static_cast<std::size_t>(c);
  }
  if (parts.size() == 4) {
    if (parts[3] == "log") g.log_spaced = true;
    else if (parts[3] == "linear") g.log_spaced = false;
    else throw CLI::ValidationError("--grid", "spacing must be log or linear");
  }
  if (!(g.lo <= g.hi)) throw CLI::ValidationError("--grid", "lo <= hi required");
  return g;
}

std::vector<double> grid_points(const Grid& g) {
  std::vector<double> xs;
  if (g.count == 1) {
    xs.push_back(g.lo);
    return xs;
  }
  for (std::size_t i = 0; i < g.count; ++i) {
    double f = i / static_cast<double>(g.count - 1);
    xs.push_back(g.log_spaced ? g.lo * std::pow(g.hi / g.lo, f)
                              : g.lo + (g.hi - g.lo) * f);
  }
  return xs;
}

struct Output {
  std::string path;     // empty = stdout
  std::string format = "csv";

  void emit(const std::string& csv_body, const json& as_json) const {
    std::ostream* out = &std::cout;
    std::ofstream file;
    if (!path.empty()) {
      file.open(path, std::ios::binary);
      if (!file) throw std::runtime_error("cannot open output file: " + path);
      out = &file;
    }
    if (format == "csv") *out << csv_body;
    else *out << as_json.dump(2) << "\n";
  }
};

json meta_block(const std::string& command, const json& spec_echo) {
  return json{{"version", kVersion}, {"spec", json{{"command", command}, {"args", spec_echo}}}};
}

TruncationPolicy make_policy(std::optional<double> tol, std::optional<long> max_terms) {
  TruncationPolicy p;
  if (tol) {
    p.abs_tol = *tol;
    p.rel_tol = *tol;
  }
  if (max_terms) p.max_terms = static_cast<std::size_t>(*max_terms);
  return p;
}

double eval_target(const std::string& target, double s, double x, const TruncationPolicy& pol) {
  if (target == "W") return eval_W(ShapeParam(s), x, pol).value;
  if (target == "F") return eval_F(s, x, pol).value;
  if (target == "logW") return dm_logW(ShapeParam(s), 0, x, pol).value;
  if (target == "logderivW") return logderiv_W(ShapeParam(s), x, pol).value;
  if (target == "logderivF") return logderiv_F(s, x, pol).value;
  if (target == "d2logW") return d2_logW_analytic(ShapeParam(s), x, pol).value;
  if (target == "d3logW") return d3_logW_analytic(ShapeParam(s), x, pol).value;
  if (target == "logF") return logF_littlewood(LittlewoodCoeffs(s, pol), x).value;
  if (target == "d1logF") return d1_logF(LittlewoodCoeffs(s, pol), x).value;
  if (target == "d2logF") return d2_logF(LittlewoodCoeffs(s, pol), x).value;
  if (target == "d3logF") return d3_logF(LittlewoodCoeffs(s, pol), x).value;
  if (target == "phi") return phi(ShapeParam(s), x, pol).value;
  if (target == "omega") return omega(ShapeParam(s), x, pol).value;
  if (target == "maincalc_rhs") return maincalc_rhs(ShapeParam(s), x, pol).value;
  if (target == "poisson_middle") return poisson_middle(ShapeParam(s), x, pol).value;
  if (target == "Phi") return Phi(s, x);
  if (target == "logW_decomposed") return logW_decomposed(s, x).value;
  if (target == "zeta") return zeta_pos(x, pol).value;
  if (target == "zetaneg") return zeta_neg(x);
  if (target == "loggamma") return log_gamma(x);
  throw CLI::ValidationError("target", "unknown eval target: " + target);
}

int cmd_eval(const std::string& target, double s, const Grid& grid, const Output& out,
             const TruncationPolicy& pol) {
  std::ostringstream csv;
  csv << "x,value\n";
  json rows = json::array();
  for (double x : grid_points(grid)) {
    double v = eval_target(target, s, x, pol);
    csv << format_number(x) << "," << format_number(v) << "\n";
    rows.push_back({{"x", x}, {"value", v}});
  }
  json j{{"meta", meta_block("eval", {{"target", target}, {"s", s}})}, {"data", rows}};
  out.emit(csv.str(), j);
  return 0;
}

int cmd_verify(const std::string& suite, double s, std::optional<Grid> grid, const Output& out,
               const TruncationPolicy& pol) {
  // Grid-driven identity tables with per-row tolerances; exit 2 on violation.
  struct Row {
    double x, lhs, rhs, tol;
  };
  std::vector<Row> rows;
  if (suite == "maincalc") {
    Grid g = grid.value_or(Grid{1.0, 1000.0, 12, true, false});
    ShapeParam p(s);
    for (double x : grid_points(g)) {
      double lhs = logderiv_W(p, x, pol).value;
      double rhs = maincalc_rhs(p, x, pol).value;
      rows.push_back({x, lhs, rhs, std::max(1e-7, 1e-6 * std::abs(lhs))});
    }
  } else if (suite == "littlewood") {
    Grid g = grid.value_or(Grid{1.01, 1e6, 40, true, false});
    LittlewoodCoeffs c(s, pol);
    for (double x : grid_points(g)) {
      double lhs = std::log(eval_F(s, x, pol).value);
      double rhs = logF_littlewood(c, x).value;
      rows.push_back({x, lhs, rhs, 1e-8 * std::max(1.0, std::abs(lhs))});
    }
  } else if (suite == "logw") {
    Grid g = grid.value_or(Grid{1.0, 100.0, 8, true, false});
    ShapeParam p(s);
    for (double x : grid_points(g)) {
      double lhs = dm_logW(p, 0, x, pol).value;
      double rhs = logW_decomposed(s, x).value;
      rows.push_back({x, lhs, rhs, 1e-5});
    }
  } else if (suite == "phideriv") {
    Grid g = grid.value_or(Grid{2.0, 50.0, 3, true, false});
    ShapeParam p(s);
    for (double x : grid_points(g)) {
      double h = 1e-3 * x;
      double lhs = (Phi(s, x + h) - Phi(s, x - h)) / (2.0 * h);
      double rhs = phi(p, x, pol).value;
      rows.push_back({x, lhs, rhs, std::max(1e-5, 1e-4 * std::abs(rhs))});
    }
  } else if (suite == "asympt") {
    ShapeParam p(s);
    for (int k = 1; k <= 20 && s * (k) <= 170.0; ++k) {
      auto [f1, f2] = asympt_coeff(p, k);
      double tol = (f1 == 0.0 && f2 == 0.0) ? 1.0 : 1e-10 * std::max(std::abs(f1), std::abs(f2));
      rows.push_back({static_cast<double>(k), f1, f2, tol});
    }
  } else {
    throw CLI::ValidationError("suite", "unknown verify suite: " + suite);
  }
  std::ostringstream csv;
  csv << "x,lhs,rhs,residual,pass\n";
  json jrows = json::array();
  json failures = json::array();
  bool ok = true;
  for (const Row& r : rows) {
    double resid = std::abs(r.lhs - r.rhs);
    bool pass = resid <= r.tol;
    if (!pass) {
      ok = false;
      failures.push_back({{"x", r.x}, {"residual", resid}, {"tol", r.tol}});
    }
    csv << format_number(r.x) << "," << format_number(r.lhs) << "," << format_number(r.rhs)
        << "," << format_number(resid) << "," << (pass ? "1" : "0") << "\n";
    jrows.push_back({{"x", r.x}, {"lhs", r.lhs}, {"rhs", r.rhs}, {"residual", resid}, {"pass", pass}});
  }
  json j{{"meta", meta_block("verify", {{"suite", suite}, {"s", s}})},
         {"data", jrows},
         {"failures", failures}};
  out.emit(csv.str(), j);
  return ok ? 0 : 2;
}

int cmd_zeros(double s, const Grid& grid, const Output& out, const TruncationPolicy& pol) {
  LittlewoodCoeffs c(s, pol);
  ZeroScan scan = zeros_d3(c, std::max(grid.lo, 1.0), grid.hi);
  std::optional<double> ratio;
  if (scan.c_points.size() >= 6) ratio = ratio_extract(scan.c_points, 5);
  std::ostringstream csv;
  {
    std::ostringstream body;
    write_pointset_csv(scan.c_points, body);
    csv << body.str();
  }
  json j{{"meta", meta_block("zeros", {{"target", "d3logF"}, {"s", s}})},
         {"data",
          {{"points", scan.c_points.points},
           {"count", scan.c_points.size()},
           {"ratio_extract", ratio ? json(*ratio) : json(nullptr)},
           {"refined_warning", scan.refined_warning}}}};
  out.emit(csv.str(), j);
  std::cerr << "zeros: " << scan.c_points.size() << " points";
  if (ratio) std::cerr << ", ratio_extract(5) = " << format_number(*ratio);
  std::cerr << "\n";
  return 0;
}

int cmd_probe(const std::string& kind, double s, double y, double x, int m, const Output& out) {
  ProbeVerdict v;
  json extra;
  if (kind == "sZ") {
    LittlewoodCoeffs c(s);
    std::vector<double> sched;
    for (int j = 10; j <= 40; ++j) sched.push_back(std::pow(s, j));
    SzResult r = sZ_probe(c, y, sched);
    v = r.probe;
    extra["membership"] = r.membership == SzMembership::member
                              ? "member"
                              : (r.membership == SzMembership::non_member ? "non-member"
                                                                          : "inconclusive");
    if (r.membership == SzMembership::member) extra["exponent"] = r.exponent;
  } else if (kind == "power") {
    ShapeParam p(s);
    FnEvaluator f{[p](double t) { return d2_logW_analytic(p, t).value; }, {}, 1e-9, 1e300};
    std::vector<double> sched;
    for (int j = 0; j < 12; ++j) sched.push_back(1e2 * std::pow(1e4, j / 11.0));
    v = power_probe(f, y, sched);
  } else if (kind == "log") {
    ShapeParam p(s);
    FnEvaluator f{[p](double t) { return d2_logW_analytic(p, t).value; }, {}, 1e-9, 1e300};
    std::vector<double> sched;
    for (int j = 0; j < 12; ++j) sched.push_back(1e2 * std::pow(1e3, j / 11.0));
    v = log_probe(f, m, y, sched);
  } else if (kind == "stirling") {
    std::vector<double> sched;
    for (int j = 0; j < 12; ++j) sched.push_back(1e2 * std::pow(1e4, j / 11.0));
    v = stirling_exp_probe(x, sched);
  } else {
    throw CLI::ValidationError("kind", "unknown probe kind: " + kind);
  }
  const char* kind_name = v.kind == ProbeKind::converged      ? "converged"
                          : v.kind == ProbeKind::diverged     ? "diverged"
                          : v.kind == ProbeKind::oscillating  ? "oscillating"
                                                              : "inconclusive";
  std::ostringstream csv;
  csv << "t,sample\n";
  json trace = json::array();
  for (auto& [t, sample] : v.trace) {
    csv << format_number(t) << "," << format_number(sample) << "\n";
    trace.push_back({{"t", t}, {"sample", sample}});
  }
  json j{{"meta", meta_block("probe", {{"kind", kind}, {"s", s}, {"y", y}, {"x", x}, {"m", m}})},
         {"data",
          {{"kind", kind_name},
           {"value", v.value ? json(*v.value) : json(nullptr)},
           {"trace", trace},
           {"extra", extra}}}};
  out.emit(csv.str(), j);
  std::cerr << "probe verdict: " << kind_name;
  if (v.value) std::cerr << " value=" << format_number(*v.value);
  if (extra.contains("membership")) std::cerr << " membership=" << extra["membership"];
  std::cerr << "\n";
  return 0;
}

int cmd_assouad(const std::string& in_path, const std::string& family, const Output& out) {
  DiscretePointSet X;
  if (!in_path.empty()) {
    X = read_pointset_csv(in_path);
  } else if (family.rfind("arith:", 0) == 0) {
    std::stringstream ss(family.substr(6));
    std::string a, b;
    std::getline(ss, a, ':');
    std::getline(ss, b, ':');
    std::vector<double> pts;
    for (long i = std::stol(a); i <= std::stol(b); ++i) pts.push_back(static_cast<double>(i));
    X = DiscretePointSet(std::move(pts));
  } else if (family.rfind("pow2:", 0) == 0) {
    long kmax = std::stol(family.substr(5));
    std::vector<double> pts;
    for (long k = 0; k <= kmax; ++k) pts.push_back(std::pow(2.0, static_cast<double>(k)));
    X = DiscretePointSet(std::move(pts));
  } else {
    throw CLI::ValidationError("assouad", "need --in or --family arith:lo:hi | pow2:kmax");
  }
  double est = assouad_zero_estimate(X);
  std::ostringstream csv;
  csv << "estimate\n" << format_number(est) << "\n";
  json j{{"meta", meta_block("assouad", {{"in", in_path}, {"family", family}})},
         {"data",
          {{"estimate", est},
           {"R_grid", assouad_default_R_grid(X)},
           {"r_ratios", assouad_default_ratios()},
           {"points", X.size()}}}};
  out.emit(csv.str(), j);
  return 0;
}

int cmd_report(const std::string& config_path, const Output& out) {
  std::vector<std::string> suites = suite_names();
  json config_echo = "default";
  if (!config_path.empty()) {
    std::ifstream in(config_path);
    if (!in) throw std::runtime_error("cannot open config: " + config_path);
    json cfg = json::parse(in);
    config_echo = cfg;
    suites.clear();
    if (cfg.contains("suites"))
      for (const auto& name : cfg["suites"]) suites.push_back(name.get<std::string>());
  }
  const std::vector<std::string>& known = suite_names();
  for (const std::string& name : suites)
    if (std::find(known.begin(), known.end(), name) == known.end()) {
      std::cerr << "unknown suite: " << name << "\n";
      return 1;
    }
  json data = json::array();
  std::ostringstream csv;
  csv << "suite,cases,max_residual,pass\n";
  bool all_pass = true;
  for (const std::string& name : suites) {
    SuiteResult r = run_suite(name);
    all_pass = all_pass && r.pass;
    data.push_back({{"suite", r.name},
                    {"cases", r.cases},
                    {"max_residual", r.max_residual},
                    {"pass", r.pass},
                    {"detail", r.detail}});
    csv << r.name << "," << r.cases << "," << format_number(r.max_residual) << ","
        << (r.pass ? "1" : "0") << "\n";
    std::cerr << (r.pass ? "PASS " : "FAIL ") << r.name << " (" << r.cases << " cases)\n";
  }
  json j{{"meta", meta_block("report", config_echo)}, {"data", data}};
  Output o = out;
  if (o.format == "csv" && o.path.empty()) o.format = "json";  // summary defaults to JSON
  o.emit(csv.str(), j);
  return all_pass ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"canonical-product numerical laboratory"};
  app.require_subcommand(1);

  std::string target, suite, probe_kind, grid_text, in_path, family, config_path;
  double s = 2.0, y = 2.0, xval = 1.0;
  int m = 1;
  std::optional<double> tol;
  std::optional<long> max_terms;
  long seed = 0;  // reserved; all computation is deterministic
  Output out;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--s", s, "shape parameter s");
    cmd->add_option("--grid", grid_text, "lo:hi:count[:log|linear]");
    cmd->add_option("--tol", tol, "tolerance override");
    cmd->add_option("--max-terms", max_terms, "term budget override");
    cmd->add_option("--out", out.path, "output file (default stdout)");
    cmd->add_option("--format", out.format, "csv|json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--seed", seed, "reserved (computation is deterministic)");
  };

  CLI::App* c_eval = app.add_subcommand("eval", "evaluate a function on a grid");
  c_eval->add_option("target", target, "function identifier")->required();
  add_common(c_eval);

  CLI::App* c_verify = app.add_subcommand("verify", "identity-verification table");
  c_verify->add_option("suite", suite, "maincalc|littlewood|logw|phideriv|asympt")->required();
  add_common(c_verify);

  CLI::App* c_zeros = app.add_subcommand("zeros", "extract the zero set of d3 log F_s");
  c_zeros->add_option("target", target, "d3logF")->required();
  add_common(c_zeros);

  CLI::App* c_probe = app.add_subcommand("probe", "run a limit/ratio probe");
  c_probe->add_option("kind", probe_kind, "sZ|power|log|stirling")->required();
  c_probe->add_option("--y", y, "scaling factor y");
  c_probe->add_option("--x", xval, "probe argument x");
  c_probe->add_option("--m", m, "polynomial degree m (log probe)");
  add_common(c_probe);

  CLI::App* c_assouad = app.add_subcommand("assouad", "Assouad-dimension-0 estimator");
  c_assouad->add_option("--in", in_path, "pointset CSV input");
  c_assouad->add_option("--family", family, "arith:lo:hi | pow2:kmax");
  add_common(c_assouad);

  CLI::App* c_report = app.add_subcommand("report", "run verification suites");
  c_report->add_option("config", config_path, "JSON config listing suites");
  add_common(c_report);

  try {
    app.parse(argc, argv);
    TruncationPolicy pol = make_policy(tol, max_terms);
    if (c_eval->parsed()) {
      Grid g = grid_text.empty() ? Grid{} : parse_grid(grid_text);
      if (g.auto_count) throw CLI::ValidationError("--grid", "auto count is for zeros only");
      return cmd_eval(target, s, g, out, pol);
    }
    if (c_verify->parsed()) {
      std::optional<Grid> g;
      if (!grid_text.empty()) g = parse_grid(grid_text);
      return cmd_verify(suite, s, g, out, pol);
    }
    if (c_zeros->parsed()) {
      if (target != "d3logF") throw CLI::ValidationError("target", "zeros supports d3logF");
      Grid g = grid_text.empty() ? Grid{1.0, std::pow(s, 12.0), 1, true, true}
                                 : parse_grid(grid_text);
      return cmd_zeros(s, g, out, pol);
    }
    if (c_probe->parsed()) return cmd_probe(probe_kind, s, y, xval, m, out);
    if (c_assouad->parsed()) return cmd_assouad(in_path, family, out);
    if (c_report->parsed()) return cmd_report(config_path, out);
    return 1;
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
