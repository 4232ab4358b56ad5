#include "polybranch/power_iter.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace polybranch {

Complex CompanionMatrix::entry(int row, int col) const {
  const int d = dimension();
  if (row < 0 || col < 0 || row >= d || col >= d) {
    throw std::out_of_range("companion entry index");
  }
  if (col == d - 1) {
    // The d = 1 matrix is just [-a_0].
    return -p_[static_cast<std::size_t>(row)] + (row == col + 1 ? 1.0 : 0.0);
  }
  return row == col + 1 ? Complex{1.0, 0.0} : Complex{};
}

std::vector<std::vector<Complex>> CompanionMatrix::dense() const {
  const int d = dimension();
  std::vector<std::vector<Complex>> m(static_cast<std::size_t>(d),
                                      std::vector<Complex>(static_cast<std::size_t>(d)));
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      m[i][j] = entry(i, j);
    }
  }
  return m;
}

void CompanionMatrix::apply(std::span<const Complex> b, std::span<Complex> out) const {
  const std::size_t d = static_cast<std::size_t>(dimension());
  const Complex last = b[d - 1];
  out[0] = -p_[0] * last;
  for (std::size_t i = 1; i < d; ++i) {
    out[i] = b[i - 1] - p_[i] * last;
  }
}

double CompanionMatrix::frobenius_norm() const {
  double s = static_cast<double>(dimension() - 1);
  for (const Complex& a : p_.coeffs()) {
    s += std::norm(a);
  }
  return std::sqrt(s);
}

CompanionMatrix companion(const MonicPolynomial& p) { return CompanionMatrix(p); }

namespace {

double norm2(std::span<const Complex> v) {
  double s = 0.0;
  for (const Complex& z : v) {
    s += std::norm(z);
  }
  return std::sqrt(s);
}

Complex inner(std::span<const Complex> u, std::span<const Complex> v) {
  Complex s{};
  for (std::size_t i = 0; i < u.size(); ++i) {
    s += std::conj(u[i]) * v[i];
  }
  return s;
}

}  // namespace

std::optional<double> geometric_ratio(std::span<const double> residuals, std::size_t window) {
  const std::size_t n = std::min(window, residuals.size());
  if (n < 10) {
    return std::nullopt;
  }
  const auto tail = residuals.subspan(residuals.size() - n);
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (!(tail[i] > 0.0)) {
      return std::nullopt;
    }
    const double x = static_cast<double>(i);
    const double y = std::log(tail[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  return std::exp(slope);
}

bool detect_equal_magnitude(std::span<const double> residuals, std::size_t window, double tol,
                            double slack) {
  if (window < 4) {
    throw std::invalid_argument("detect_equal_magnitude: window must be >= 4");
  }
  if (residuals.size() < window) {
    return false;
  }
  const auto tail = residuals.subspan(residuals.size() - window);
  if (!std::all_of(tail.begin(), tail.end(), [tol](double r) { return r > tol; })) {
    return false;
  }
  // Short windows still get a fit; the 10-sample minimum only guards the
  // reported rate.
  const std::size_t n = tail.size();
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double x = static_cast<double>(i);
    const double y = std::log(tail[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  return std::exp(slope) >= 1.0 - slack;
}

PowerIterResult power_iterate(const CompanionMatrix& F, int max_iters, double tol) {
  if (max_iters < 1) {
    throw std::invalid_argument("power_iterate: max_iters must be >= 1");
  }
  if (!(tol > 0.0)) {
    throw std::invalid_argument("power_iterate: tol must be positive");
  }
  const std::size_t d = static_cast<std::size_t>(F.dimension());
  std::vector<Complex> b(d), next(d);
  b[d - 1] = 1.0;

  PowerIterResult out;
  for (int n = 1; n <= max_iters; ++n) {
    F.apply(b, next);
    const double len = norm2(next);
    if (len == 0.0) {
      throw ZeroEigenvalue();
    }
    for (auto& z : next) {
      z /= len;
    }
    const Complex c = inner(b, next);
    const Complex phase = std::abs(c) > 0.0 ? c / std::abs(c) : Complex{1.0, 0.0};
    double step = 0.0;
    for (std::size_t i = 0; i < d; ++i) {
      step += std::norm(next[i] - phase * b[i]);
    }
    out.residuals.push_back(std::sqrt(step));
    b.swap(next);
    out.iterations = n;
    if (out.residuals.back() < tol) {
      out.converged = true;
      break;
    }
  }

  F.apply(b, next);
  out.eigenvalue = inner(b, next);  // b has unit norm
  out.eigenvector = b;
  out.rate_estimate = geometric_ratio(out.residuals, kRateWindow);
  if (!out.converged) {
    out.equal_magnitude = detect_equal_magnitude(out.residuals, kRateWindow, tol);
  }
  return out;
}

namespace {

Complex polish(const MonicPolynomial& p, Complex x) {
  for (int i = 0; i < kPowerPolishSteps; ++i) {
    const Complex dp = evaluate_derivative(p, x);
    if (dp == Complex{}) {
      break;
    }
    const Complex next = x - evaluate(p, x) / dp;
    if (!all_finite(next)) {
      break;
    }
    x = next;
  }
  return x;
}

}  // namespace

RootReport solve_by_power_iteration(const MonicPolynomial& p, int max_iters, double tol) {
  RootReport report;
  report.method = SolveMethod::power_iteration;
  report.epsilon = tol;
  const int d = p.degree();
  report.roots.assign(static_cast<std::size_t>(d),
                      Complex{std::numeric_limits<double>::quiet_NaN(),
                              std::numeric_limits<double>::quiet_NaN()});
  report.per_root_iterations.assign(static_cast<std::size_t>(d), 0);
  report.status.assign(static_cast<std::size_t>(d), RootStatus::unresolved);

  MonicPolynomial current = p;
  for (int stage = 0; stage < d; ++stage) {
    const auto idx = static_cast<std::size_t>(stage);
    if (current.degree() == 1) {
      report.roots[idx] = -current[0];
      report.status[idx] = RootStatus::converged;
      break;
    }
    PowerIterResult r;
    try {
      r = power_iterate(companion(current), max_iters, tol);
    } catch (const ZeroEigenvalue& e) {
      report.status[idx] = RootStatus::zero_eigenvalue;
      report.failed_stage = stage;
      report.warnings.push_back("stage " + std::to_string(stage) + ": " + e.what());
      break;
    }
    report.per_root_iterations[idx] = r.iterations;
    if (!r.converged) {
      report.status[idx] =
          r.equal_magnitude ? RootStatus::equal_magnitude : RootStatus::no_convergence;
      report.failed_stage = stage;
      report.warnings.push_back(
          "stage " + std::to_string(stage) + ": " +
          (r.equal_magnitude ? "dominant eigenvalues of equal modulus; power iteration oscillates"
                             : "power iteration did not converge within max_iters"));
      break;
    }
    const Complex root = polish(current, r.eigenvalue);
    report.roots[idx] = root;
    report.status[idx] = RootStatus::converged;
    current = deflate(current, root).quotient;
  }
  fill_residuals(report, p);
  return report;
}

}  // namespace polybranch
