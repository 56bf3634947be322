#pragma once

#include <string>
#include <vector>

namespace canprod {

struct SuiteResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  double max_residual = 0.0;  // worst residual/tolerance ratio (<= 1 means pass)
  bool pass = false;
  std::vector<std::string> detail;
};

// Verification batteries; names accepted by run_suite:
//   maincalc littlewood phi_deriv logw_reconstruction asympt_coeffs
//   zero_ratio omega_density probes assouad fast_sequence goldens
const std::vector<std::string>& suite_names();
SuiteResult run_suite(const std::string& name);

}  // namespace canprod
