#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace polybranch {

using Complex = std::complex<double>;

// Monic polynomial t^d + a_{d-1} t^{d-1} + ... + a_0. The leading 1 is
// implicit; coeffs are stored in ascending order (a_0 first).
class MonicPolynomial {
public:
  explicit MonicPolynomial(std::vector<Complex> coeffs);

  int degree() const { return static_cast<int>(coeffs_.size()); }
  std::span<const Complex> coeffs() const { return coeffs_; }
  const Complex& operator[](std::size_t i) const { return coeffs_[i]; }

  friend bool operator==(const MonicPolynomial&, const MonicPolynomial&) = default;

private:
  std::vector<Complex> coeffs_;
};

using RootTuple = std::vector<Complex>;

struct Deflation {
  MonicPolynomial quotient;
  Complex remainder;
};

Complex evaluate(const MonicPolynomial& p, Complex t);

// p'(t), used by the polishing steps of the eigenvalue route.
Complex evaluate_derivative(const MonicPolynomial& p, Complex t);

// (t - r_1)(t - r_2)...(t - r_d), expanded by multiplying the factors in
// input order.
MonicPolynomial roots_to_poly(std::span<const Complex> roots);

// Synthetic division by (t - root). Requires degree >= 2.
Deflation deflate(const MonicPolynomial& p, Complex root);

// True iff two roots lie within tol (absolute) of each other.
bool has_repeated_roots(std::span<const Complex> roots, double tol);

// Membership in the coefficient box B_K = { |a_i| <= K }. K may be +inf.
bool in_B_K(const MonicPolynomial& p, double K);

// Default box size 2^d, enough to hold every polynomial whose roots lie in
// the closed unit disk.
double default_box_bound(int degree);

// Smallest pairwise distance; +inf for fewer than two roots.
double min_separation(std::span<const Complex> roots);

bool all_finite(Complex z);

}  // namespace polybranch
