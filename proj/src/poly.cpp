#include "polybranch/poly.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace polybranch {

MonicPolynomial::MonicPolynomial(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) {
    throw std::invalid_argument("monic polynomial needs degree >= 1");
  }
}

bool all_finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

Complex evaluate(const MonicPolynomial& p, Complex t) {
  Complex acc{1.0, 0.0};
  const auto a = p.coeffs();
  for (std::size_t i = a.size(); i-- > 0;) {
    acc = acc * t + a[i];
  }
  return acc;
}

Complex evaluate_derivative(const MonicPolynomial& p, Complex t) {
  const auto a = p.coeffs();
  const auto d = a.size();
  Complex acc{static_cast<double>(d), 0.0};
  for (std::size_t i = d - 1; i >= 1; --i) {
    acc = acc * t + static_cast<double>(i) * a[i];
  }
  return acc;
}

MonicPolynomial roots_to_poly(std::span<const Complex> roots) {
  if (roots.empty()) {
    throw std::invalid_argument("roots_to_poly: empty root tuple");
  }
  // full[i] is the coefficient of t^i; the product starts at the constant 1.
  std::vector<Complex> full{Complex{1.0, 0.0}};
  for (const Complex& r : roots) {
    std::vector<Complex> next(full.size() + 1, Complex{});
    for (std::size_t i = 0; i < full.size(); ++i) {
      next[i + 1] += full[i];
      next[i] -= r * full[i];
    }
    full = std::move(next);
  }
  full.pop_back();
  return MonicPolynomial(std::move(full));
}

Deflation deflate(const MonicPolynomial& p, Complex root) {
  const int d = p.degree();
  if (d < 2) {
    throw std::invalid_argument("deflate: degree must be >= 2");
  }
  const auto a = p.coeffs();
  // Synthetic division from the top: c_{d-2} = a_{d-1} + root, then
  // c_{i-1} = a_i + root * c_i; the remainder is a_0 + root * c_0.
  std::vector<Complex> quotient(static_cast<std::size_t>(d - 1));
  Complex c{1.0, 0.0};
  for (int i = d - 1; i >= 1; --i) {
    c = a[static_cast<std::size_t>(i)] + root * c;
    quotient[static_cast<std::size_t>(i - 1)] = c;
  }
  const Complex remainder = a[0] + root * c;
  return {MonicPolynomial(std::move(quotient)), remainder};
}

bool has_repeated_roots(std::span<const Complex> roots, double tol) {
  if (tol < 0.0) {
    throw std::invalid_argument("has_repeated_roots: tol must be >= 0");
  }
  for (std::size_t i = 0; i < roots.size(); ++i) {
    for (std::size_t j = i + 1; j < roots.size(); ++j) {
      if (std::abs(roots[i] - roots[j]) <= tol) {
        return true;
      }
    }
  }
  return false;
}

bool in_B_K(const MonicPolynomial& p, double K) {
  if (!(K > 0.0)) {
    throw std::invalid_argument("in_B_K: K must be positive");
  }
  for (const Complex& a : p.coeffs()) {
    if (std::abs(a) > K) {
      return false;
    }
  }
  return true;
}

double default_box_bound(int degree) { return std::ldexp(1.0, degree); }

double min_separation(std::span<const Complex> roots) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < roots.size(); ++i) {
    for (std::size_t j = i + 1; j < roots.size(); ++j) {
      best = std::min(best, std::abs(roots[i] - roots[j]));
    }
  }
  return best;
}

}  // namespace polybranch
