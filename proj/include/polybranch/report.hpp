#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "polybranch/poly.hpp"

namespace polybranch {

enum class SolveMethod { closed_form, power_iteration, pure_power };

const char* to_string(SolveMethod m);
// Accepts "closed-form", "power-iteration" and "pure-power".
std::optional<SolveMethod> parse_method(const std::string& s);

// Per-root outcome. Only the eigenvalue route produces anything other than
// `converged`.
enum class RootStatus { converged, equal_magnitude, no_convergence, zero_eigenvalue, unresolved };

const char* to_string(RootStatus s);

struct RootReport {
  SolveMethod method = SolveMethod::closed_form;
  double epsilon = 0.0;
  RootTuple roots;
  std::vector<double> residuals;  // |p(root)|
  std::vector<int> per_root_iterations;
  std::vector<RootStatus> status;
  std::size_t branch_count = 0;
  std::vector<std::string> warnings;
  std::vector<std::string> notes;
  // Deflation stage (0-based) at which the eigenvalue route gave up.
  std::optional<int> failed_stage;

  bool complete() const;
};

// Residuals recomputed against p for every root; NaN roots give NaN.
void fill_residuals(RootReport& r, const MonicPolynomial& p);

// JSON with "schema": 1. Non-finite numbers serialize as null.
nlohmann::json to_json(const RootReport& r);

nlohmann::json complex_to_json(Complex z);

}  // namespace polybranch
