#pragma once

#include <vector>

#include "fecc/element.hpp"
#include "fecc/report.hpp"

namespace fecc {

/// x^0, ..., x^max_degree.
std::vector<Polynomial> monomial_probes(int max_degree);

/// Structure of the stored node matrices, exactly:
///   (a) Hermite block (1..2m+1) is the identity
///   (b) Hermite rows vanish on the bubble columns 2m+2..n
///   (c) bubble block is lower triangular
///   (d) last row and column are the unit vector e_{n+1}
///   (e) nonzero diagonal
///   (f) M0 and M1 are invertible
///   (g) M1 is M0 without its last row and column
/// Witness indices are 1-based (row, column).
VerificationReport verify_unisolvence(const Element1D& e);

/// Hypotheses of the commuting-interpolation lemma for the pair (k=0, k=1):
///   (i)   basis0[n+1] is a nonzero constant, so it spans ker d
///   (ii)  N0_i(basis0[n+1]) = 0 for i <= n and N0_{n+1}(basis0[j]) = 0 for j <= n
///   (iii) basis1 spans P_{n-1} = range d
///   (iv)  d basis0[j] = basis1[j] for j <= n
///   (v)   N1_i(du) = N0_i(u) for i <= n on monomials up to probe_degree
/// Requires probe_degree >= n.
VerificationReport verify_lemma_hypotheses(const Element1D& e, int probe_degree);

/// d(I_0 u) - I_1(du) is the zero polynomial for every probe.
VerificationReport verify_commutation(const Element1D& e, const std::vector<Polynomial>& probes);

/// I_0 reproduces P_n and I_1 reproduces P_{n-1} (checked on monomials and on
/// each basis function).
VerificationReport verify_projection(const Element1D& e);

/// Floating commutation residual max |d I_0 u - I_1 du| on a 1001-point grid.
double smooth_commutation_residual(const Element1D& e, const SmoothFunction1D& u, int quadrature_order);

VerificationReport verify_smooth_commutation(const Element1D& e, const SmoothFunction1D& u, int quadrature_order,
                                             double tolerance = 1e-12);

/// A function on [0,2] given by its pieces on [0,1] and [1,2]. For a smooth
/// u both pieces are u; distinct pieces model inputs with a kink at x = 1.
struct PiecewiseSmooth1D {
  SmoothFunction1D left;
  SmoothFunction1D right;
};

/// Interpolants on the two cells [0,1] and [1,2], built from the Hermite
/// degrees of freedom u(a), u(b), u^(s)(a), u^(s)(b) (s <= m) plus the
/// interior moments, all pulled back to the reference cell.
struct TwoCellInterpolant {
  RealPolynomial left;   // on the reference cell for [0,1]
  RealPolynomial right;  // on the reference cell for [1,2]

  /// Value or derivative of the physical piecewise interpolant at x in [0,2].
  double derivative(int order, double x) const;
};

TwoCellInterpolant two_cell_interpolant(const Element1D& e, const PiecewiseSmooth1D& u, int quadrature_order);

/// Checks that the two-cell interpolant is C^m at x = 1 (one-sided derivative
/// mismatch <= tolerance for orders 0..m). Input pieces whose own derivatives
/// disagree at the junction are flagged with witness kind
/// "input-regularity".
VerificationReport two_cell_continuity_demo(const Element1D& e, const PiecewiseSmooth1D& u, double tolerance = 1e-12);
VerificationReport two_cell_continuity_demo(const Element1D& e, const SmoothFunction1D& u, double tolerance = 1e-12);

}  // namespace fecc
