#include "fecc/element.hpp"

#include <stdexcept>
#include <string>

#include "fecc/errors.hpp"
#include "fecc/families.hpp"

namespace fecc {

const std::vector<NodeFunctional>& Element1D::functionals(FormDegree k) const {
  return k == FormDegree::zero ? functionals0 : functionals1;
}

const std::vector<Polynomial>& Element1D::basis(FormDegree k) const {
  return k == FormDegree::zero ? basis0 : basis1;
}

const RationalMatrix& Element1D::node_matrix(FormDegree k) const { return k == FormDegree::zero ? M0 : M1; }

const RationalMatrix& Element1D::alpha(FormDegree k) const { return k == FormDegree::zero ? alpha0 : alpha1; }

std::size_t Element1D::dimension(FormDegree k) const {
  return static_cast<std::size_t>(k == FormDegree::zero ? n + 1 : n);
}

namespace {

void check_parameters(int m, int n) {
  if (m < 0) throw InvalidParameter("continuity order m must be >= 0, got " + std::to_string(m));
  if (n < 2 * m + 1)
    throw InvalidParameter("degree too low to host C^m Hermite block: n=" + std::to_string(n) +
                           " < 2m+1=" + std::to_string(2 * m + 1));
}

}  // namespace

std::vector<NodeFunctional> node_functionals(int m, int n, FormDegree k) {
  check_parameters(m, n);
  std::vector<NodeFunctional> out;
  if (k == FormDegree::zero) {
    for (int i = 0; i < m; ++i) {
      out.push_back({EndpointDerivative{0, i + 1, false}, k});
      out.push_back({EndpointDerivative{1, i + 1, false}, k});
    }
    for (int i = 1; i <= n - 2 * m; ++i) out.push_back({Moment{i - 1, true}, k});
    out.push_back({EndpointSum{}, k});
  } else {
    for (int i = 0; i < m; ++i) {
      out.push_back({EndpointDerivative{0, i, false}, k});
      out.push_back({EndpointDerivative{1, i, false}, k});
    }
    for (int i = 1; i <= n - 2 * m; ++i) out.push_back({Moment{i - 1, false}, k});
  }
  return out;
}

RationalMatrix compute_node_matrix(const std::vector<NodeFunctional>& functionals,
                                   const std::vector<Polynomial>& basis) {
  RationalMatrix mat(functionals.size(), basis.size());
  for (std::size_t i = 0; i < functionals.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) mat(i, j) = apply_functional(functionals[i], basis[j]);
  return mat;
}

Element1D build_element(int m, int n) {
  check_parameters(m, n);
  Element1D e;
  e.m = m;
  e.n = n;
  e.functionals0 = node_functionals(m, n, FormDegree::zero);
  e.functionals1 = node_functionals(m, n, FormDegree::one);

  e.basis0.reserve(static_cast<std::size_t>(n) + 1);
  for (int j = 0; j < m; ++j) {
    e.basis0.push_back(hermite_basis(m, Endpoint::left, j + 1));
    e.basis0.push_back(hermite_basis(m, Endpoint::right, j + 1));
  }
  e.basis0.push_back((hermite_basis(m, Endpoint::right, 0) - hermite_basis(m, Endpoint::left, 0)) *
                     Rational(1, 2));
  for (int j = 2; j <= n - 2 * m; ++j) e.basis0.push_back(iterated_legendre_integral(m + 1, j + m - 1));
  e.basis0.push_back(Polynomial::constant(Rational(1, 2)));

  e.basis1.reserve(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) e.basis1.push_back(differentiate(e.basis0[static_cast<std::size_t>(j)]));

  e.M0 = compute_node_matrix(e.functionals0, e.basis0);
  e.M1 = compute_node_matrix(e.functionals1, e.basis1);
  auto inv0 = inverse(e.M0);
  auto inv1 = inverse(e.M1);
  if (!inv0 || !inv1)
    throw std::logic_error("singular node matrix for m=" + std::to_string(m) + " n=" + std::to_string(n));
  e.alpha0 = std::move(*inv0);
  e.alpha1 = std::move(*inv1);
  return e;
}

const RationalMatrix& node_matrix(const Element1D& e, FormDegree k) { return e.node_matrix(k); }

std::vector<Rational> functional_values(const Element1D& e, FormDegree k, const Polynomial& u) {
  const auto& fs = e.functionals(k);
  std::vector<Rational> v;
  v.reserve(fs.size());
  for (const auto& f : fs) v.push_back(apply_functional(f, u));
  return v;
}

std::vector<Rational> interpolation_coefficients(const Element1D& e, FormDegree k, const Polynomial& u) {
  return e.alpha(k) * functional_values(e, k, u);
}

Polynomial combine(const Element1D& e, FormDegree k, const std::vector<Rational>& coefficients) {
  const auto& basis = e.basis(k);
  if (coefficients.size() != basis.size()) throw InvalidParameter("coefficient count does not match the basis");
  Polynomial p;
  for (std::size_t j = 0; j < basis.size(); ++j)
    if (!coefficients[j].is_zero()) p += basis[j] * coefficients[j];
  return p;
}

Polynomial interpolate(const Element1D& e, FormDegree k, const Polynomial& u) {
  return combine(e, k, interpolation_coefficients(e, k, u));
}

RealPolynomial interpolate_smooth(const Element1D& e, FormDegree k, const SmoothFunction1D& u, int quadrature_order) {
  const auto& fs = e.functionals(k);
  std::vector<double> values;
  values.reserve(fs.size());
  for (const auto& f : fs) values.push_back(apply_functional_smooth(f, u, quadrature_order));
  const std::vector<double> coeffs = to_real(e.alpha(k)) * values;
  RealPolynomial p;
  const auto& basis = e.basis(k);
  for (std::size_t j = 0; j < basis.size(); ++j) p += coeffs[j] * RealPolynomial(basis[j]);
  return p;
}

int default_quadrature_order(const Element1D& e) { return 2 * (e.n + 2); }

}  // namespace fecc
