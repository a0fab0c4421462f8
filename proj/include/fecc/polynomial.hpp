#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fecc/rational.hpp"

namespace fecc {

/// Degree reported for the zero polynomial; stands in for -infinity.
inline constexpr int kZeroPolynomialDegree = -1;

/// Univariate polynomial in x on [0,1] with exact rational coefficients.
/// Coefficient i multiplies x^i. Trailing zeros are never stored, so the
/// zero polynomial has an empty coefficient sequence.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);

  static Polynomial constant(const Rational& c);
  static Polynomial monomial(int power, const Rational& c = Rational(1));
  /// The identity polynomial x.
  static Polynomial x();

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  std::span<const Rational> coefficients() const noexcept { return coeffs_; }
  /// Coefficient of x^power, zero beyond the degree.
  Rational coefficient(int power) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& s);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(const Polynomial& a);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

Polynomial poly_add(const Polynomial& p, const Polynomial& q);
Polynomial poly_mul(const Polynomial& p, const Polynomial& q);
Polynomial poly_scale(const Polynomial& p, const Rational& s);

Polynomial differentiate(const Polynomial& p);
/// order-fold derivative.
Polynomial differentiate(const Polynomial& p, int order);
/// Antiderivative that vanishes at x = 0.
Polynomial integrate_from_zero(const Polynomial& p);

Rational evaluate(const Polynomial& p, const Rational& x);
Rational evaluate_derivative(const Polynomial& p, int order, const Rational& x);
/// Exact integral of p over [0,1].
Rational definite_integral(const Polynomial& p);

/// Human readable form, e.g. "3/2*x^2 - x + 1".
std::string to_string(const Polynomial& p);
std::ostream& operator<<(std::ostream& os, const Polynomial& p);

/// Parses literals such as "x^2", "3x^2-2x+1/2", "1/2*x^3 - x". Only the
/// variable x is accepted.
Polynomial parse_polynomial(std::string_view text);

/// Floating-coefficient polynomial produced by interpolating smooth inputs.
class RealPolynomial {
 public:
  RealPolynomial() = default;
  explicit RealPolynomial(std::vector<double> coefficients) : coeffs_(std::move(coefficients)) {}
  explicit RealPolynomial(const Polynomial& exact);

  std::span<const double> coefficients() const noexcept { return coeffs_; }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

  double operator()(double x) const;
  double derivative(int order, double x) const;
  RealPolynomial derivative() const;

  RealPolynomial& operator+=(const RealPolynomial& other);
  RealPolynomial& operator-=(const RealPolynomial& other);
  RealPolynomial& operator*=(double s);

  friend RealPolynomial operator+(RealPolynomial a, const RealPolynomial& b) { return a += b; }
  friend RealPolynomial operator-(RealPolynomial a, const RealPolynomial& b) { return a -= b; }
  friend RealPolynomial operator*(double s, RealPolynomial a) { return a *= s; }

 private:
  std::vector<double> coeffs_;
};

/// max |p(x)| over an equispaced grid of the given size on [a,b].
double sup_norm_on_grid(const RealPolynomial& p, int samples = 1001, double a = 0.0, double b = 1.0);

}  // namespace fecc
