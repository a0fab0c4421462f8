#include "fecc/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <ostream>
#include <sstream>

#include "fecc/errors.hpp"

namespace fecc {

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(int power, const Rational& c) {
  if (power < 0) throw InvalidParameter("negative monomial power");
  std::vector<Rational> coeffs(static_cast<std::size_t>(power) + 1);
  coeffs.back() = c;
  return Polynomial(std::move(coeffs));
}

Polynomial Polynomial::x() { return monomial(1); }

Rational Polynomial::coefficient(int power) const {
  if (power < 0 || power > degree()) return Rational(0);
  return coeffs_[static_cast<std::size_t>(power)];
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& s) {
  if (s.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= s;
  return *this;
}

Polynomial operator-(const Polynomial& a) { return a * Rational(-1); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Polynomial(std::move(out));
}

Polynomial poly_add(const Polynomial& p, const Polynomial& q) { return p + q; }
Polynomial poly_mul(const Polynomial& p, const Polynomial& q) { return p * q; }
Polynomial poly_scale(const Polynomial& p, const Rational& s) { return p * s; }

Polynomial differentiate(const Polynomial& p) {
  if (p.degree() < 1) return {};
  std::vector<Rational> out(static_cast<std::size_t>(p.degree()));
  for (int i = 1; i <= p.degree(); ++i) out[static_cast<std::size_t>(i - 1)] = p.coefficient(i) * Rational(i);
  return Polynomial(std::move(out));
}

Polynomial differentiate(const Polynomial& p, int order) {
  if (order < 0) throw InvalidParameter("negative derivative order");
  Polynomial r = p;
  for (int k = 0; k < order && !r.is_zero(); ++k) r = differentiate(r);
  return r;
}

Polynomial integrate_from_zero(const Polynomial& p) {
  if (p.is_zero()) return {};
  std::vector<Rational> out(static_cast<std::size_t>(p.degree()) + 2);
  for (int i = 0; i <= p.degree(); ++i) out[static_cast<std::size_t>(i + 1)] = p.coefficient(i) / Rational(i + 1);
  return Polynomial(std::move(out));
}

Rational evaluate(const Polynomial& p, const Rational& x) {
  Rational acc(0);
  const auto c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Rational evaluate_derivative(const Polynomial& p, int order, const Rational& x) {
  return evaluate(differentiate(p, order), x);
}

Rational definite_integral(const Polynomial& p) {
  Rational acc(0);
  for (int i = 0; i <= p.degree(); ++i) acc += p.coefficient(i) / Rational(i + 1);
  return acc;
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    Rational c = p.coefficient(i);
    if (c.is_zero()) continue;
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    c = abs(c);
    const bool unit = c == Rational(1);
    if (i == 0) {
      os << (c.is_integer() ? c.numerator() : c.to_string());
    } else {
      if (!unit) os << (c.is_integer() ? c.numerator() : c.to_string()) << "*";
      os << "x";
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << to_string(p); }

namespace {

class PolynomialParser {
 public:
  explicit PolynomialParser(std::string_view text) {
    for (char ch : text)
      if (!std::isspace(static_cast<unsigned char>(ch))) s_.push_back(ch);
  }

  Polynomial parse() {
    if (s_.empty()) fail("empty polynomial literal");
    Polynomial result;
    bool first = true;
    while (pos_ < s_.size()) {
      int sign = 1;
      if (s_[pos_] == '+' || s_[pos_] == '-') {
        sign = s_[pos_] == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      result += term() * Rational(sign);
      first = false;
    }
    return result;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " in polynomial literal '" + s_ + "' at position " + std::to_string(pos_));
  }

  bool at_digit() const { return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])); }

  std::string digits() {
    const std::size_t start = pos_;
    while (at_digit()) ++pos_;
    return s_.substr(start, pos_ - start);
  }

  Polynomial term() {
    Rational coeff(1);
    bool has_coeff = false;
    if (at_digit()) {
      std::string num = digits();
      if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        if (!at_digit()) fail("expected denominator");
        num += "/" + digits();
      }
      coeff = Rational::parse(num);
      has_coeff = true;
      if (pos_ < s_.size() && s_[pos_] == '*') ++pos_;
    }
    int power = 0;
    if (pos_ < s_.size() && s_[pos_] == 'x') {
      ++pos_;
      power = 1;
      if (pos_ < s_.size() && s_[pos_] == '^') {
        ++pos_;
        if (!at_digit()) fail("expected exponent");
        power = std::stoi(digits());
      }
    } else if (!has_coeff) {
      fail("expected coefficient or x");
    }
    return Polynomial::monomial(power, coeff);
  }

  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text) { return PolynomialParser(text).parse(); }

RealPolynomial::RealPolynomial(const Polynomial& exact) {
  coeffs_.reserve(exact.coefficients().size());
  for (const auto& c : exact.coefficients()) coeffs_.push_back(c.to_double());
}

double RealPolynomial::operator()(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RealPolynomial RealPolynomial::derivative() const {
  if (coeffs_.size() < 2) return {};
  std::vector<double> out(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = static_cast<double>(i) * coeffs_[i];
  return RealPolynomial(std::move(out));
}

double RealPolynomial::derivative(int order, double x) const {
  RealPolynomial d = *this;
  for (int k = 0; k < order; ++k) d = d.derivative();
  return d(x);
}

RealPolynomial& RealPolynomial::operator+=(const RealPolynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0.0);
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

RealPolynomial& RealPolynomial::operator-=(const RealPolynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0.0);
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

RealPolynomial& RealPolynomial::operator*=(double s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

double sup_norm_on_grid(const RealPolynomial& p, int samples, double a, double b) {
  double best = 0.0;
  for (int i = 0; i < samples; ++i) {
    const double x = samples == 1 ? a : a + (b - a) * i / (samples - 1);
    best = std::max(best, std::abs(p(x)));
  }
  return best;
}

}  // namespace fecc
