#include "fecc/families.hpp"

#include <stdexcept>
#include <string>

#include "fecc/errors.hpp"

namespace fecc {

Polynomial legendre(int j) {
  if (j < 0) throw InvalidParameter("legendre index must be >= 0");
  // (k+1) l_{k+1} = (2k+1)(2x-1) l_k - k l_{k-1}
  const Polynomial t({Rational(-1), Rational(2)});
  Polynomial prev = Polynomial::constant(1);
  if (j == 0) return prev;
  Polynomial cur = t;
  for (int k = 1; k < j; ++k) {
    Polynomial next = (t * cur) * Rational(2 * k + 1, k + 1) - prev * Rational(k, k + 1);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Polynomial iterated_legendre_integral(int alpha, int j) {
  if (alpha < 0) throw InvalidParameter("integration count must be >= 0");
  Polynomial p = legendre(j);
  for (int a = 0; a < alpha; ++a) p = integrate_from_zero(p);
  return p;
}

std::vector<Rational> legendre_expansion(const Polynomial& p) {
  std::vector<Rational> c;
  c.reserve(static_cast<std::size_t>(p.degree() + 1));
  for (int i = 0; i <= p.degree(); ++i) c.push_back(Rational(2 * i + 1) * definite_integral(p * legendre(i)));
  return c;
}

Polynomial from_legendre_expansion(const std::vector<Rational>& coefficients) {
  Polynomial p;
  for (std::size_t i = 0; i < coefficients.size(); ++i)
    if (!coefficients[i].is_zero()) p += legendre(static_cast<int>(i)) * coefficients[i];
  return p;
}

namespace {

Rational binomial(int n, int k) {
  Rational r(1);
  for (int i = 1; i <= k; ++i) r = r * Rational(n - k + i) / Rational(i);
  return r;
}

Rational factorial(int n) {
  Rational r(1);
  for (int i = 2; i <= n; ++i) r *= Rational(i);
  return r;
}

// Closed form for the basis attached to x = 0:
//   x^beta / beta! * (1-x)^(m+1) * sum_{k=0}^{m-beta} C(m+k, k) x^k
Polynomial left_hermite(int m, int beta) {
  Polynomial sum;
  for (int k = 0; k <= m - beta; ++k) sum += Polynomial::monomial(k, binomial(m + k, k));
  const Polynomial one_minus_x({Rational(1), Rational(-1)});
  Polynomial p = Polynomial::monomial(beta, Rational(1) / factorial(beta)) * sum;
  for (int k = 0; k <= m; ++k) p = p * one_minus_x;
  return p;
}

// p(1 - x)
Polynomial reflect(const Polynomial& p) {
  const Polynomial one_minus_x({Rational(1), Rational(-1)});
  Polynomial out;
  Polynomial power = Polynomial::constant(1);
  for (int i = 0; i <= p.degree(); ++i) {
    out += power * p.coefficient(i);
    power = power * one_minus_x;
  }
  return out;
}

}  // namespace

Polynomial hermite_basis(int m, Endpoint side, int beta) {
  if (m < 0) throw InvalidParameter("continuity order m must be >= 0");
  if (beta < 0 || beta > m) throw InvalidParameter("hermite index beta must lie in 0..m");
  Polynomial h = left_hermite(m, beta);
  if (side == Endpoint::right) h = reflect(h) * Rational(beta % 2 == 0 ? 1 : -1);

  const Rational own = side == Endpoint::left ? Rational(0) : Rational(1);
  const Rational other = side == Endpoint::left ? Rational(1) : Rational(0);
  for (int gamma = 0; gamma <= m; ++gamma) {
    const Polynomial d = differentiate(h, gamma);
    if (evaluate(d, own) != Rational(gamma == beta ? 1 : 0) || !evaluate(d, other).is_zero())
      throw std::logic_error("hermite basis post-condition violated at m=" + std::to_string(m) +
                             " beta=" + std::to_string(beta) + " gamma=" + std::to_string(gamma));
  }
  return h;
}

}  // namespace fecc
