#pragma once

#include <stdexcept>
#include <string>

#include "polybranch/poly.hpp"
#include "polybranch/trace.hpp"

namespace polybranch {

struct NewtonConfig {
  double threshold_r = 0.1;          // convergence radius
  int max_iters_N = 100;             // uniform iteration cap
  double divergence_bailout = 1e8;   // |x_n| / max(1, |S|) above this is divergence

  void validate() const;
};

enum class NewtonStatus { converged, max_iterations, diverged, critical_point };

const char* to_string(NewtonStatus s);

struct NewtonOutcome {
  bool converged = false;
  Complex value{};
  int iterations = 0;
  NewtonStatus status = NewtonStatus::max_iterations;
};

class NoConvergence : public std::runtime_error {
public:
  explicit NoConvergence(NewtonOutcome outcome)
      : std::runtime_error(std::string("no convergence: ") + to_string(outcome.status)),
        outcome_(outcome) {}
  const NewtonOutcome& outcome() const { return outcome_; }

private:
  NewtonOutcome outcome_;
};

// x^d by repeated squaring.
Complex ipow(Complex x, int d);

// One Newton step for x^d - S. Division by zero yields non-finite values;
// callers check x != 0 first.
Complex newton_step(int d, Complex S, Complex x);

// Residual bound used by the solver-side stopping test:
//   |x^d - S| < d * max(1, |S|) * max(r^d, 64 eps).
// The floor keeps tiny radii reachable in double precision.
double residual_tolerance(int d, Complex S, double threshold_r);

// Modulus beyond which an orbit for x^d - S counts as divergent. Scaled by
// |S| because one step from a unit seed already lands near S / d.
double divergence_limit(Complex S, const NewtonConfig& cfg);

// Newton's method for x^d - S from `seed`. Stops when the step is below
// threshold_r and the residual is below residual_tolerance, when |x| exceeds
// divergence_limit, at an exact critical point x = 0, or after max_iters_N steps.
NewtonOutcome newton_root(int d, Complex S, Complex seed, const NewtonConfig& cfg);

// Seed for angular sector k: e^{2 pi i k / d^2}.
Complex sector_seed(int d, int k);

// Sector k holds S with arg(S e^{-2 pi i k/d}) in [-pi/d, pi/d), arg in
// [-pi, pi). For d = 2 the split is the sign of Re(S) instead, so that
// S with Re(S) < 0 is sector 1.
int sector_index(int d, Complex S);

struct SeedChoice {
  Complex seed;
  int sector = 0;
};

// Picks the seed whose fast-convergence sector contains S, recording the
// sector tests as a chain of at most d - 1 decisions (exactly one for d = 2).
// Throws std::domain_error for S = 0.
SeedChoice select_seed(int d, Complex S, BranchTrace& trace);
SeedChoice select_seed(int d, Complex S);

struct Radical {
  Complex value;
  int iterations = 0;
  int sector = 0;
  int polish_steps = 0;
};

// Extra Newton steps applied after a radical converges: at least
// kPolishSteps, then more until the update is at rounding level.
inline constexpr int kPolishSteps = 3;
inline constexpr int kMaxPolishSteps = 40;

// A d-th root of S computed the branch-accounted way: sector chain, seeded
// Newton, then the polishing steps above. S = 0 walks the same sector chain
// (arg 0 = 0 lands in sector 0) and returns the exact fixed point 0 with no
// iterations. Throws NoConvergence.
Radical radical(int d, Complex S, const NewtonConfig& cfg, BranchTrace& trace);

struct PurePowerSolution {
  RootTuple roots;
  int iterations = 0;
};

// All d roots of t^d - S: one zero test, the sector chain, one Newton solve,
// then rotation by the d-th roots of unity. At most d recorded decisions.
PurePowerSolution solve_pure_power_detailed(int d, Complex S, const NewtonConfig& cfg,
                                            BranchTrace& trace);

RootTuple solve_pure_power(int d, Complex S, const NewtonConfig& cfg, BranchTrace& trace);

}  // namespace polybranch
