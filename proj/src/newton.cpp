#include "polybranch/newton.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace polybranch {

namespace {

void require_degree(int d) {
  if (d < 2) {
    throw std::invalid_argument("degree must be >= 2");
  }
}

}  // namespace

void NewtonConfig::validate() const {
  if (!(threshold_r > 0.0)) {
    throw std::invalid_argument("threshold_r must be positive");
  }
  if (max_iters_N < 1) {
    throw std::invalid_argument("max_iters_N must be >= 1");
  }
  if (!(divergence_bailout > 0.0)) {
    throw std::invalid_argument("divergence_bailout must be positive");
  }
}

const char* to_string(NewtonStatus s) {
  switch (s) {
    case NewtonStatus::converged:
      return "converged";
    case NewtonStatus::max_iterations:
      return "max iterations";
    case NewtonStatus::diverged:
      return "diverged";
    case NewtonStatus::critical_point:
      return "critical point";
  }
  return "unknown";
}

Complex ipow(Complex x, int d) {
  Complex result{1.0, 0.0};
  Complex base = x;
  while (d > 0) {
    if (d & 1) {
      result *= base;
    }
    d >>= 1;
    if (d > 0) {
      base *= base;
    }
  }
  return result;
}

Complex newton_step(int d, Complex S, Complex x) {
  const Complex xd1 = ipow(x, d - 1);
  return x - (xd1 * x - S) / (static_cast<double>(d) * xd1);
}

double residual_tolerance(int d, Complex S, double threshold_r) {
  constexpr double kFloor = 64.0 * std::numeric_limits<double>::epsilon();
  const double rd = std::pow(threshold_r, d);
  return static_cast<double>(d) * std::max(1.0, std::abs(S)) * std::max(rd, kFloor);
}

double divergence_limit(Complex S, const NewtonConfig& cfg) {
  return cfg.divergence_bailout * std::max(1.0, std::abs(S));
}

NewtonOutcome newton_root(int d, Complex S, Complex seed, const NewtonConfig& cfg) {
  require_degree(d);
  cfg.validate();
  if (seed == Complex{}) {
    throw std::invalid_argument("newton_root: seed must be nonzero");
  }
  const double tol = residual_tolerance(d, S, cfg.threshold_r);
  const double limit = divergence_limit(S, cfg);
  NewtonOutcome out;
  Complex x = seed;
  for (int n = 1; n <= cfg.max_iters_N; ++n) {
    if (x == Complex{}) {
      out.status = NewtonStatus::critical_point;
      out.value = x;
      out.iterations = n - 1;
      return out;
    }
    const Complex next = newton_step(d, S, x);
    out.iterations = n;
    if (!all_finite(next) || std::abs(next) > limit) {
      out.status = NewtonStatus::diverged;
      out.value = next;
      return out;
    }
    const double step = std::abs(next - x);
    x = next;
    if (step < cfg.threshold_r && std::abs(ipow(x, d) - S) < tol) {
      out.converged = true;
      out.status = NewtonStatus::converged;
      out.value = x;
      return out;
    }
  }
  out.status = NewtonStatus::max_iterations;
  out.value = x;
  return out;
}

Complex sector_seed(int d, int k) {
  const double angle = 2.0 * std::numbers::pi * k / (static_cast<double>(d) * d);
  return std::polar(1.0, angle);
}

int sector_index(int d, Complex S) {
  require_degree(d);
  if (d == 2) {
    return S.real() < 0.0 ? 1 : 0;
  }
  constexpr double pi = std::numbers::pi;
  double theta = std::arg(S);
  if (theta >= pi) {
    theta = -pi;
  }
  const double width = 2.0 * pi / d;
  int k = static_cast<int>(std::floor((theta + pi / d) / width));
  k %= d;
  if (k < 0) {
    k += d;
  }
  return k;
}

namespace {

// The sector chain itself. arg(0) = 0 and Re(0) = 0, so S = 0 resolves to
// sector 0 without a separate test.
SeedChoice choose_seed(int d, Complex S, BranchTrace& trace) {
  const int k = sector_index(d, S);
  if (d == 2) {
    trace.record("re_omega_neg", k == 1);
    return {sector_seed(2, k), k};
  }
  // Test sectors 0 .. d-2 in turn; the last one is the default.
  for (int j = 0; j < d - 1; ++j) {
    if (trace.record("sector_" + std::to_string(j), k == j)) {
      return {sector_seed(d, j), j};
    }
  }
  return {sector_seed(d, d - 1), d - 1};
}

}  // namespace

SeedChoice select_seed(int d, Complex S, BranchTrace& trace) {
  require_degree(d);
  if (S == Complex{}) {
    throw std::domain_error("zero has only the trivial root");
  }
  return choose_seed(d, S, trace);
}

SeedChoice select_seed(int d, Complex S) {
  auto scratch = BranchTrace::disabled();
  return select_seed(d, S, scratch);
}

Radical radical(int d, Complex S, const NewtonConfig& cfg, BranchTrace& trace) {
  require_degree(d);
  const SeedChoice choice = choose_seed(d, S, trace);
  if (S == Complex{}) {
    // 0 is the fixed point of the iteration; stepping toward it is linear
    // and would stop at a residual-sized value instead.
    return {Complex{}, 0, choice.sector};
  }
  const NewtonOutcome out = newton_root(d, S, choice.seed, cfg);
  if (!out.converged) {
    throw NoConvergence(out);
  }
  // The stopping test is absolute for |S| < 1, so a small radicand can stop
  // with a poor relative error. Keep stepping until the update reaches
  // rounding level.
  constexpr double kRoundoff = 8.0 * std::numeric_limits<double>::epsilon();
  Complex x = out.value;
  int polish = 0;
  while (polish < kMaxPolishSteps && x != Complex{}) {
    const Complex next = newton_step(d, S, x);
    const double step = std::abs(next - x);
    x = next;
    ++polish;
    if (polish >= kPolishSteps && step <= kRoundoff * std::abs(x)) {
      break;
    }
  }
  trace.count_computation(static_cast<std::size_t>(out.iterations + polish));
  return {x, out.iterations, choice.sector, polish};
}

PurePowerSolution solve_pure_power_detailed(int d, Complex S, const NewtonConfig& cfg,
                                            BranchTrace& trace) {
  require_degree(d);
  PurePowerSolution sol;
  if (trace.record("s_is_zero", S == Complex{})) {
    sol.roots.assign(static_cast<std::size_t>(d), Complex{});
    return sol;
  }
  const Radical principal = radical(d, S, cfg, trace);
  sol.iterations = principal.iterations;
  sol.roots.reserve(static_cast<std::size_t>(d));
  for (int j = 0; j < d; ++j) {
    const Complex unit = std::polar(1.0, 2.0 * std::numbers::pi * j / d);
    sol.roots.push_back(principal.value * unit);
  }
  return sol;
}

RootTuple solve_pure_power(int d, Complex S, const NewtonConfig& cfg, BranchTrace& trace) {
  return solve_pure_power_detailed(d, S, cfg, trace).roots;
}

}  // namespace polybranch
