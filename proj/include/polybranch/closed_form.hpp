#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polybranch/newton.hpp"
#include "polybranch/poly.hpp"
#include "polybranch/trace.hpp"

namespace polybranch {

// Which route through a closed-form solver an input took. Everything other
// than `generic` is a degenerate route whose branch count is measured rather
// than bounded in advance.
enum class ClosedFormPath {
  generic,
  triple_root,        // cubic with p = q = 0, or quartic with Q = 0
  paired_resolvent,   // quartic whose chosen resolvent root gives S = 0
  resolvent_retry,    // quartic whose radical sign made Q vanish spuriously
};

const char* to_string(ClosedFormPath p);

struct ClosedFormSolution {
  RootTuple roots;
  // Newton iterations spent on the radicals each root depends on.
  std::vector<int> per_root_iterations;
  ClosedFormPath path = ClosedFormPath::generic;
};

// Intermediate quantities of the quartic formula. p, q, omega0 and omega1 are
// polynomial in the coefficients and cost no decisions; Q and S_res are set
// once the radicals have been taken.
struct QuarticResolvent {
  Complex p;
  Complex q;
  Complex omega0;
  Complex omega1;
  std::optional<Complex> Q;
  std::optional<Complex> S_res;
};

QuarticResolvent quartic_resolvent(Complex a3, Complex a2, Complex a1, Complex a0);

// t^2 + a1 t + a0 via Omega = a1^2 - 4 a0 and one seeded square root.
// Exactly one recorded decision (the sign of Re(Omega)).
ClosedFormSolution solve_quadratic_detailed(Complex a1, Complex a0, const NewtonConfig& cfg,
                                            BranchTrace& trace);

// Cardano on the depressed cubic: one square root, a sign choice that keeps
// -q/2 + sqrt(disc) away from cancellation, a zero guard, and one cube root.
// The partner cube root is -p/(3u), so no second sector chain is needed.
// At most five recorded decisions.
ClosedFormSolution solve_cubic_detailed(Complex a2, Complex a1, Complex a0,
                                        const NewtonConfig& cfg, BranchTrace& trace);

struct QuarticSolution {
  ClosedFormSolution solution;
  QuarticResolvent resolvent;
};

// Resolvent-cubic route: sqrt(Omega1^2 - 4 Omega0^3), cube root for Q, one
// guard on Q * S^2 = 0, sqrt for S, then the two final square roots. Seven
// decisions on the generic path.
QuarticSolution solve_quartic_detailed(Complex a3, Complex a2, Complex a1, Complex a0,
                                       const NewtonConfig& cfg, BranchTrace& trace);

RootTuple solve_quadratic(Complex a1, Complex a0, const NewtonConfig& cfg, BranchTrace& trace);
RootTuple solve_cubic(Complex a2, Complex a1, Complex a0, const NewtonConfig& cfg,
                      BranchTrace& trace);
RootTuple solve_quartic(Complex a3, Complex a2, Complex a1, Complex a0, const NewtonConfig& cfg,
                        BranchTrace& trace);

// Dispatch on degree (2, 3 or 4). Throws std::invalid_argument otherwise.
ClosedFormSolution solve_closed_form(const MonicPolynomial& p, const NewtonConfig& cfg,
                                     BranchTrace& trace);

// Declared branch ceilings for the generic paths.
inline constexpr std::size_t kQuadraticBranches = 1;
inline constexpr std::size_t kCubicBranchCeiling = 5;
inline constexpr std::size_t kQuarticBranchCeiling = 7;

}  // namespace polybranch
