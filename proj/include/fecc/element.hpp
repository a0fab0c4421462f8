#pragma once

#include <vector>

#include "fecc/functional.hpp"
#include "fecc/matrix.hpp"
#include "fecc/polynomial.hpp"
#include "fecc/smooth.hpp"

namespace fecc {

/// Version tag of the functional/basis numbering used by exports.
inline constexpr const char* kFunctionalScheme = "hermite-moment-sum/v1";

/// The (m, n) element pair on [0,1]: 0-forms in P_n with n+1 functionals and
/// basis functions, 1-forms in P_{n-1} with n of each.
///
/// Numbering (1-based, as in reports):
///   0-form functionals  2i+1, 2i+2 : u^(i+1)(0), u^(i+1)(1)      i = 0..m-1
///                       2m+i       : int legendre(i-1) u'        i = 1..n-2m
///                       n+1        : u(1) + u(0)
///   0-form basis        2j+1, 2j+2 : Hermite h_{0,j+1}, h_{1,j+1}  j = 0..m-1
///                       2m+1       : (h_{1,0} - h_{0,0}) / 2
///                       2m+j       : (m+1)-fold integrated legendre(j+m-1), j = 2..n-2m
///                       n+1        : 1/2
///   1-form functionals  2i+1, 2i+2 : v^(i)(0), v^(i)(1)          i = 0..m-1
///                       2m+i       : int legendre(i-1) v         i = 1..n-2m
///   1-form basis        j          : derivative of 0-form basis j, j = 1..n
///
/// Matrix entries M_k(i, j) = functional_i(basis_j); alpha_k = M_k^{-1}.
/// Instances are treated as immutable once built.
struct Element1D {
  int m = 0;
  int n = 0;
  std::vector<NodeFunctional> functionals0;
  std::vector<NodeFunctional> functionals1;
  std::vector<Polynomial> basis0;
  std::vector<Polynomial> basis1;
  RationalMatrix M0;
  RationalMatrix M1;
  RationalMatrix alpha0;
  RationalMatrix alpha1;

  /// Rank of the derivative P_n -> P_{n-1}.
  int rank_d() const noexcept { return n; }

  const std::vector<NodeFunctional>& functionals(FormDegree k) const;
  const std::vector<Polynomial>& basis(FormDegree k) const;
  const RationalMatrix& node_matrix(FormDegree k) const;
  const RationalMatrix& alpha(FormDegree k) const;
  /// Dimension of the space for form degree k: n+1 or n.
  std::size_t dimension(FormDegree k) const;
};

/// Builds the element. Throws InvalidParameter for m < 0 or n < 2m+1.
Element1D build_element(int m, int n);

/// The node functional lists alone (cheap; no matrices).
std::vector<NodeFunctional> node_functionals(int m, int n, FormDegree k);

/// Computes functional_i(basis_j) from the element's functionals and basis.
RationalMatrix compute_node_matrix(const std::vector<NodeFunctional>& functionals,
                                   const std::vector<Polynomial>& basis);

/// Returns the stored M_k.
const RationalMatrix& node_matrix(const Element1D& e, FormDegree k);

/// Values of every functional of family k on u.
std::vector<Rational> functional_values(const Element1D& e, FormDegree k, const Polynomial& u);

/// Coefficients of I_k u in basis k, i.e. alpha_k times the functional values.
std::vector<Rational> interpolation_coefficients(const Element1D& e, FormDegree k, const Polynomial& u);

/// Polynomial sum_j c_j basis_j.
Polynomial combine(const Element1D& e, FormDegree k, const std::vector<Rational>& coefficients);

/// Exact interpolant I_k u = sum_i N_i(u) sum_j alpha(j, i) phi_j.
Polynomial interpolate(const Element1D& e, FormDegree k, const Polynomial& u);

/// Smooth-input interpolant; functionals evaluated with apply_functional_smooth.
RealPolynomial interpolate_smooth(const Element1D& e, FormDegree k, const SmoothFunction1D& u, int quadrature_order);

/// Default quadrature order for smooth inputs: 2(n+2).
int default_quadrature_order(const Element1D& e);

}  // namespace fecc
