#include "polybranch/closed_form.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace polybranch {

namespace {

// Relative-zero thresholds for the degenerate guards.
constexpr double kCardanoZero = 1e-14;
constexpr double kResolventZero = 1e-12;
constexpr double kCoefficientZero = 1e-12;

const Complex kOmega = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
const Complex kOmegaBar = std::conj(kOmega);

// |x| / scale, with 0/0 read as zero.
double relative(Complex x, double scale) { return scale > 0.0 ? std::abs(x) / scale : 0.0; }

ClosedFormSolution uniform(RootTuple roots, int iterations, ClosedFormPath path) {
  ClosedFormSolution s;
  s.per_root_iterations.assign(roots.size(), iterations);
  s.roots = std::move(roots);
  s.path = path;
  return s;
}

}  // namespace

const char* to_string(ClosedFormPath p) {
  switch (p) {
    case ClosedFormPath::generic:
      return "generic";
    case ClosedFormPath::triple_root:
      return "triple_root";
    case ClosedFormPath::paired_resolvent:
      return "paired_resolvent";
    case ClosedFormPath::resolvent_retry:
      return "resolvent_retry";
  }
  return "unknown";
}

ClosedFormSolution solve_quadratic_detailed(Complex a1, Complex a0, const NewtonConfig& cfg,
                                            BranchTrace& trace) {
  const Complex omega = a1 * a1 - 4.0 * a0;
  const Radical root = radical(2, omega, cfg, trace);
  return uniform({0.5 * (-a1 + root.value), 0.5 * (-a1 - root.value)}, root.iterations,
                 ClosedFormPath::generic);
}

ClosedFormSolution solve_cubic_detailed(Complex a2, Complex a1, Complex a0,
                                        const NewtonConfig& cfg, BranchTrace& trace) {
  // t = y - a2/3 turns the cubic into y^3 + p y + q.
  const Complex shift = a2 / 3.0;
  const Complex p = a1 - a2 * a2 / 3.0;
  const Complex q = 2.0 * a2 * a2 * a2 / 27.0 - a2 * a1 / 3.0 + a0;

  const Complex disc = q * q / 4.0 + p * p * p / 27.0;
  const Radical sq = radical(2, disc, cfg, trace);
  const Complex h = -0.5 * q;
  Complex D = sq.value;
  if (trace.record("cardano_flip_sign", std::abs(h - D) > std::abs(h + D))) {
    D = -D;
  }
  const Complex w = h + D;

  const double root_scale =
      std::max({1.0, std::abs(a2), std::sqrt(std::abs(a1)), std::cbrt(std::abs(a0))});
  const double w_scale = root_scale * root_scale * root_scale;
  if (trace.record("cardano_zero", std::abs(w) <= kCardanoZero * w_scale)) {
    return uniform({-shift, -shift, -shift}, sq.iterations, ClosedFormPath::triple_root);
  }

  const Radical cube = radical(3, w, cfg, trace);
  const Complex u = cube.value;
  const Complex v = -p / (3.0 * u);
  RootTuple roots{u + v - shift, kOmega * u + kOmegaBar * v - shift,
                  kOmegaBar * u + kOmega * v - shift};
  return uniform(std::move(roots), sq.iterations + cube.iterations, ClosedFormPath::generic);
}

QuarticResolvent quartic_resolvent(Complex a3, Complex a2, Complex a1, Complex a0) {
  QuarticResolvent r;
  r.p = (8.0 * a2 - 3.0 * a3 * a3) / 8.0;
  r.q = (a3 * a3 * a3 - 4.0 * a3 * a2 + 8.0 * a1) / 8.0;
  r.omega0 = a2 * a2 - 3.0 * a3 * a1 + 12.0 * a0;
  r.omega1 = 2.0 * a2 * a2 * a2 - 9.0 * a3 * a2 * a1 + 27.0 * a3 * a3 * a0 + 27.0 * a1 * a1 -
             72.0 * a2 * a0;
  return r;
}

namespace {

// Omega0 / Q with 0 / 0 read as 0. An exact zero Q only arises from an exact
// zero radicand, which already forces Omega0 = 0, and the recorded guard that
// follows routes it away from the generic formula.
Complex omega0_over(const QuarticResolvent& r, Complex Q) {
  return Q == Complex{} ? Complex{} : r.omega0 / Q;
}

// 4 S^2 for the resolvent root selected by the cube root Q.
Complex resolvent_value(const QuarticResolvent& r, Complex Q) {
  return -2.0 / 3.0 * r.p + (Q + omega0_over(r, Q)) / 3.0;
}

double resolvent_scale(const QuarticResolvent& r, Complex Q) {
  return 2.0 / 3.0 * std::abs(r.p) + (std::abs(Q) + std::abs(omega0_over(r, Q))) / 3.0;
}

// Ferrari's final step once a nonzero S is known.
void finish_generic(const QuarticResolvent& r, Complex shift, Complex S, int shared_iters,
                    const NewtonConfig& cfg, BranchTrace& trace, ClosedFormSolution& out) {
  const Complex base = -4.0 * S * S - 2.0 * r.p;
  const Complex ratio = r.q / S;
  const Radical plus = radical(2, base + ratio, cfg, trace);
  const Complex lo = shift - S;
  out.roots.push_back(lo + 0.5 * plus.value);
  out.roots.push_back(lo - 0.5 * plus.value);
  const Radical minus = radical(2, base - ratio, cfg, trace);
  const Complex hi = shift + S;
  out.roots.push_back(hi + 0.5 * minus.value);
  out.roots.push_back(hi - 0.5 * minus.value);
  out.per_root_iterations = {shared_iters + plus.iterations, shared_iters + plus.iterations,
                             shared_iters + minus.iterations, shared_iters + minus.iterations};
}

// The chosen resolvent root is zero, so q = 0 and the roots come in pairs
// +-y_a, +-y_b. The other two resolvent roots are (y_a + y_b)^2 and
// (y_a - y_b)^2; their square roots give the roots with any sign choice.
void finish_paired(const QuarticResolvent& r, Complex shift, Complex Q, int shared_iters,
                   const NewtonConfig& cfg, BranchTrace& trace, ClosedFormSolution& out) {
  const Complex t1 = -2.0 / 3.0 * r.p + (kOmega * Q + kOmegaBar * omega0_over(r, Q)) / 3.0;
  const Complex t2 = -2.0 / 3.0 * r.p + (kOmegaBar * Q + kOmega * omega0_over(r, Q)) / 3.0;
  const Radical s1 = radical(2, t1, cfg, trace);
  const Radical s2 = radical(2, t2, cfg, trace);
  const Complex ya = 0.5 * (s1.value + s2.value);
  const Complex yb = 0.5 * (s1.value - s2.value);
  out.roots = {shift + ya, shift - ya, shift + yb, shift - yb};
  out.per_root_iterations.assign(4, shared_iters + s1.iterations + s2.iterations);
}

}  // namespace

QuarticSolution solve_quartic_detailed(Complex a3, Complex a2, Complex a1, Complex a0,
                                       const NewtonConfig& cfg, BranchTrace& trace) {
  QuarticSolution result;
  QuarticResolvent& r = result.resolvent;
  ClosedFormSolution& out = result.solution;
  r = quartic_resolvent(a3, a2, a1, a0);
  const Complex shift = -a3 / 4.0;

  const Complex delta = r.omega1 * r.omega1 - 4.0 * r.omega0 * r.omega0 * r.omega0;
  const Radical sd = radical(2, delta, cfg, trace);
  Complex w = 0.5 * (r.omega1 + sd.value);
  const double w_scale = 0.5 * (std::abs(r.omega1) + std::abs(sd.value));
  Radical cube = radical(3, w, cfg, trace);
  Complex Q = cube.value;
  Complex T = resolvent_value(r, Q);
  int shared = sd.iterations + cube.iterations;

  // One guard covers both divisions in the formula: by Q (Q = 0) and by S
  // (S^2 = T / 4 = 0).
  const double rel_w = relative(w, w_scale);
  const double rel_T = relative(T, resolvent_scale(r, Q));
  if (!trace.record("resolvent_degenerate", rel_w * rel_T < kResolventZero)) {
    const Radical s = radical(2, T, cfg, trace);
    const Complex S = 0.5 * s.value;
    r.Q = Q;
    r.S_res = S;
    finish_generic(r, shift, S, shared + s.iterations, cfg, trace, out);
    return result;
  }

  if (!trace.record("Q_zero", rel_w <= rel_T)) {
    // S = 0 for this Q.
    r.Q = Q;
    r.S_res = Complex{};
    out.path = ClosedFormPath::paired_resolvent;
    finish_paired(r, shift, Q, shared, cfg, trace, out);
    return result;
  }

  // w vanished, so Omega0 = 0. Either Omega1 = 0 too (a root of multiplicity
  // >= 3) or the square root came out with the cancelling sign.
  const double omega1_scale = 2.0 * std::norm(a2) * std::abs(a2) +
                              9.0 * std::abs(a3 * a2 * a1) + 27.0 * std::abs(a3 * a3 * a0) +
                              27.0 * std::norm(a1) + 72.0 * std::abs(a2 * a0);
  if (trace.record("omega1_zero", relative(r.omega1, omega1_scale) < kCoefficientZero)) {
    // Depressed roots rho, rho, rho, -3 rho with p = -6 rho^2, q = 8 rho^3.
    const double p_scale = std::abs(a2) + 3.0 / 8.0 * std::norm(a3);
    Complex rho{};
    if (!trace.record("p_zero", relative(r.p, p_scale) < kCoefficientZero)) {
      rho = -3.0 * r.q / (4.0 * r.p);
    }
    r.Q = Complex{};
    out = uniform({shift + rho, shift + rho, shift + rho, shift - 3.0 * rho}, sd.iterations,
                  ClosedFormPath::triple_root);
    return result;
  }

  out.path = ClosedFormPath::resolvent_retry;
  w = r.omega1 - w;
  cube = radical(3, w, cfg, trace);
  Q = cube.value;
  T = resolvent_value(r, Q);
  shared = sd.iterations + cube.iterations;
  r.Q = Q;
  if (trace.record("s_zero", relative(T, resolvent_scale(r, Q)) < kResolventZero)) {
    r.S_res = Complex{};
    finish_paired(r, shift, Q, shared, cfg, trace, out);
    return result;
  }
  const Radical s = radical(2, T, cfg, trace);
  r.S_res = 0.5 * s.value;
  finish_generic(r, shift, *r.S_res, shared + s.iterations, cfg, trace, out);
  return result;
}

RootTuple solve_quadratic(Complex a1, Complex a0, const NewtonConfig& cfg, BranchTrace& trace) {
  return solve_quadratic_detailed(a1, a0, cfg, trace).roots;
}

RootTuple solve_cubic(Complex a2, Complex a1, Complex a0, const NewtonConfig& cfg,
                      BranchTrace& trace) {
  return solve_cubic_detailed(a2, a1, a0, cfg, trace).roots;
}

RootTuple solve_quartic(Complex a3, Complex a2, Complex a1, Complex a0, const NewtonConfig& cfg,
                        BranchTrace& trace) {
  return solve_quartic_detailed(a3, a2, a1, a0, cfg, trace).solution.roots;
}

ClosedFormSolution solve_closed_form(const MonicPolynomial& p, const NewtonConfig& cfg,
                                     BranchTrace& trace) {
  switch (p.degree()) {
    case 2:
      return solve_quadratic_detailed(p[1], p[0], cfg, trace);
    case 3:
      return solve_cubic_detailed(p[2], p[1], p[0], cfg, trace);
    case 4:
      return solve_quartic_detailed(p[3], p[2], p[1], p[0], cfg, trace).solution;
    default:
      throw std::invalid_argument("closed-form solvers cover degrees 2, 3 and 4 only");
  }
}

}  // namespace polybranch
