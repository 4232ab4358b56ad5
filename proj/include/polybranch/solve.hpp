#pragma once

#include <optional>
#include <vector>

#include "polybranch/report.hpp"

namespace polybranch {

struct SolveRequest {
  std::vector<Complex> coefficients;  // a_0 ... a_{d-1}
  SolveMethod method = SolveMethod::closed_form;
  double epsilon = 1e-8;
  std::optional<int> max_iters;  // method default when absent
};

inline constexpr int kDefaultNewtonIters = 100;
inline constexpr int kDefaultPowerIters = 5000;
inline constexpr double kRepeatedRootTolerance = 1e-9;

int default_max_iters(SolveMethod m);

// Checks the method/degree pairing and the numeric parameters. Throws
// std::invalid_argument with a user-facing message.
void validate(const SolveRequest& req);

// Validates, dispatches, fills residuals and adds a warning for roots that
// coincide within kRepeatedRootTolerance. Newton failures inside the
// closed-form and pure-power routes surface as NoConvergence.
RootReport solve(const SolveRequest& req);

}  // namespace polybranch
