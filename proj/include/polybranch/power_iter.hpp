#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "polybranch/poly.hpp"
#include "polybranch/report.hpp"

namespace polybranch {

// Companion matrix of a monic polynomial: ones on the subdiagonal and
// -a_0 ... -a_{d-1} down the last column. Stored implicitly; entries are
// computed on demand. Indices are 0-based.
class CompanionMatrix {
public:
  explicit CompanionMatrix(MonicPolynomial p) : p_(std::move(p)) {}

  int dimension() const { return p_.degree(); }
  const MonicPolynomial& polynomial() const { return p_; }

  Complex entry(int row, int col) const;
  std::vector<std::vector<Complex>> dense() const;

  // F b in O(d): a shift plus a multiple of the last column.
  void apply(std::span<const Complex> b, std::span<Complex> out) const;

  double frobenius_norm() const;

private:
  MonicPolynomial p_;
};

CompanionMatrix companion(const MonicPolynomial& p);

class ZeroEigenvalue : public std::runtime_error {
public:
  ZeroEigenvalue() : std::runtime_error("zero eigenvalue present; deflate t first") {}
};

struct PowerIterResult {
  Complex eigenvalue{};
  std::vector<Complex> eigenvector;  // unit norm
  int iterations = 0;
  bool converged = false;
  std::optional<double> rate_estimate;
  bool equal_magnitude = false;
  std::vector<double> residuals;  // phase-aligned step per iteration
};

// Geometric ratio of the trailing `window` residuals by a least-squares fit
// of log(residual) against the index. Needs at least 10 positive residuals.
std::optional<double> geometric_ratio(std::span<const double> residuals, std::size_t window = 20);

// True when the trailing window shows no geometric decay (fitted ratio at
// least 1 - slack) while every residual in it stays above tol. Requires
// window >= 4; shorter histories return false.
bool detect_equal_magnitude(std::span<const double> residuals, std::size_t window, double tol,
                            double slack = 0.02);

// Power iteration from b_0 = e_d. Converged when the phase-aligned step
// ||b_n - e^{i phi} b_{n-1}|| drops below tol; the eigenvalue is the
// Rayleigh quotient of the final iterate. After max_iters without
// convergence the equal-magnitude detector runs on the residual history.
// Throws ZeroEigenvalue if an iterate is mapped to the zero vector.
PowerIterResult power_iterate(const CompanionMatrix& F, int max_iters, double tol);

// Dominant eigenvalue, three Newton steps on the current polynomial, deflate,
// repeat. Branch-free: fixed seed, fixed step counts. A stage that fails
// leaves its root and all later ones flagged rather than guessed.
RootReport solve_by_power_iteration(const MonicPolynomial& p, int max_iters, double tol);

inline constexpr int kPowerPolishSteps = 3;
inline constexpr std::size_t kRateWindow = 20;

}  // namespace polybranch
