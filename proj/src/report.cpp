#include "polybranch/report.hpp"

#include <algorithm>
#include <cmath>

namespace polybranch {

const char* to_string(SolveMethod m) {
  switch (m) {
    case SolveMethod::closed_form:
      return "closed-form";
    case SolveMethod::power_iteration:
      return "power-iteration";
    case SolveMethod::pure_power:
      return "pure-power";
  }
  return "unknown";
}

std::optional<SolveMethod> parse_method(const std::string& s) {
  for (auto m : {SolveMethod::closed_form, SolveMethod::power_iteration, SolveMethod::pure_power}) {
    if (s == to_string(m)) {
      return m;
    }
  }
  return std::nullopt;
}

const char* to_string(RootStatus s) {
  switch (s) {
    case RootStatus::converged:
      return "converged";
    case RootStatus::equal_magnitude:
      return "equal_magnitude";
    case RootStatus::no_convergence:
      return "no_convergence";
    case RootStatus::zero_eigenvalue:
      return "zero_eigenvalue";
    case RootStatus::unresolved:
      return "unresolved";
  }
  return "unknown";
}

bool RootReport::complete() const {
  return std::all_of(status.begin(), status.end(),
                     [](RootStatus s) { return s == RootStatus::converged; });
}

void fill_residuals(RootReport& r, const MonicPolynomial& p) {
  r.residuals.clear();
  for (const Complex& z : r.roots) {
    r.residuals.push_back(all_finite(z) ? std::abs(evaluate(p, z))
                                        : std::numeric_limits<double>::quiet_NaN());
  }
}

namespace {

nlohmann::json number(double x) { return std::isfinite(x) ? nlohmann::json(x) : nlohmann::json(); }

}  // namespace

nlohmann::json complex_to_json(Complex z) {
  if (!all_finite(z)) {
    return nullptr;
  }
  return nlohmann::json::array({z.real(), z.imag()});
}

nlohmann::json to_json(const RootReport& r) {
  nlohmann::json roots = nlohmann::json::array();
  for (const Complex& z : r.roots) {
    roots.push_back(complex_to_json(z));
  }
  nlohmann::json residuals = nlohmann::json::array();
  for (double x : r.residuals) {
    residuals.push_back(number(x));
  }
  nlohmann::json status = nlohmann::json::array();
  for (RootStatus s : r.status) {
    status.push_back(to_string(s));
  }
  nlohmann::json j{{"schema", 1},
                   {"method", to_string(r.method)},
                   {"epsilon", r.epsilon},
                   {"degree", r.roots.size()},
                   {"roots", roots},
                   {"residuals", residuals},
                   {"per_root_iterations", r.per_root_iterations},
                   {"root_status", status},
                   {"branch_count", r.branch_count},
                   {"warnings", r.warnings},
                   {"notes", r.notes}};
  j["failed_stage"] = r.failed_stage ? nlohmann::json(*r.failed_stage) : nlohmann::json();
  return j;
}

}  // namespace polybranch
