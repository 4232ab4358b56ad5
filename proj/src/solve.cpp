#include "polybranch/solve.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <stdexcept>
#include <string>

#include "polybranch/closed_form.hpp"
#include "polybranch/newton.hpp"
#include "polybranch/power_iter.hpp"

namespace polybranch {

int default_max_iters(SolveMethod m) {
  return m == SolveMethod::power_iteration ? kDefaultPowerIters : kDefaultNewtonIters;
}

void validate(const SolveRequest& req) {
  const auto d = req.coefficients.size();
  if (d == 0) {
    throw std::invalid_argument("at least one coefficient is required");
  }
  if (!std::all_of(req.coefficients.begin(), req.coefficients.end(), all_finite)) {
    throw std::invalid_argument("coefficients must be finite");
  }
  if (!(req.epsilon > 0.0) || !std::isfinite(req.epsilon)) {
    throw std::invalid_argument("epsilon must be a positive finite number");
  }
  if (req.max_iters && *req.max_iters < 1) {
    throw std::invalid_argument("max-iters must be >= 1");
  }
  switch (req.method) {
    case SolveMethod::closed_form:
      if (d < 2 || d > 4) {
        throw std::invalid_argument("closed-form needs degree 2, 3 or 4 (got degree " +
                                    std::to_string(d) + ")");
      }
      break;
    case SolveMethod::pure_power:
      if (d < 2) {
        throw std::invalid_argument("pure-power needs degree >= 2");
      }
      if (std::any_of(req.coefficients.begin() + 1, req.coefficients.end(),
                      [](Complex a) { return a != Complex{}; })) {
        throw std::invalid_argument("pure-power needs t^d - S: only a_0 may be nonzero");
      }
      break;
    case SolveMethod::power_iteration:
      break;
  }
}

RootReport solve(const SolveRequest& req) {
  validate(req);
  const MonicPolynomial p(req.coefficients);
  const int max_iters = req.max_iters.value_or(default_max_iters(req.method));

  RootReport report;
  if (req.method == SolveMethod::power_iteration) {
    report = solve_by_power_iteration(p, max_iters, req.epsilon);
  } else {
    NewtonConfig cfg;
    cfg.threshold_r = req.epsilon;
    cfg.max_iters_N = max_iters;
    BranchTrace trace;
    if (req.method == SolveMethod::closed_form) {
      const ClosedFormSolution s = solve_closed_form(p, cfg, trace);
      report.roots = s.roots;
      report.per_root_iterations = s.per_root_iterations;
      if (s.path != ClosedFormPath::generic) {
        report.notes.push_back(std::string("degenerate path: ") + to_string(s.path));
      }
    } else {
      const PurePowerSolution s = solve_pure_power_detailed(p.degree(), -p[0], cfg, trace);
      report.roots = s.roots;
      report.per_root_iterations.assign(s.roots.size(), s.iterations);
    }
    report.method = req.method;
    report.epsilon = req.epsilon;
    report.branch_count = trace.size();
    report.status.assign(report.roots.size(), RootStatus::converged);
    fill_residuals(report, p);
  }

  std::vector<Complex> finite;
  std::copy_if(report.roots.begin(), report.roots.end(), std::back_inserter(finite), all_finite);
  if (has_repeated_roots(finite, kRepeatedRootTolerance)) {
    report.warnings.push_back("repeated roots: two roots agree within 1e-09");
  }
  return report;
}

}  // namespace polybranch
