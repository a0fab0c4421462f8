#include "fecc/verify.hpp"

#include <cmath>
#include <sstream>

#include "fecc/errors.hpp"

namespace fecc {

namespace {

std::vector<std::pair<std::string, long>> mn(const Element1D& e) { return {{"m", e.m}, {"n", e.n}}; }

long one_based(std::size_t i) { return static_cast<long>(i) + 1; }

std::string real_string(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

}  // namespace

std::vector<Polynomial> monomial_probes(int max_degree) {
  std::vector<Polynomial> probes;
  for (int a = 0; a <= max_degree; ++a) probes.push_back(Polynomial::monomial(a));
  return probes;
}

VerificationReport verify_unisolvence(const Element1D& e) {
  VerificationReport report("unisolvence", mn(e));
  const auto size = static_cast<std::size_t>(e.n) + 1;
  const auto hermite = static_cast<std::size_t>(2 * e.m + 1);
  const auto last = size - 1;
  const RationalMatrix& M0 = e.M0;

  if (M0.rows() != size || M0.cols() != size || e.M1.rows() != size - 1 || e.M1.cols() != size - 1) {
    report.fail({"shape", {static_cast<long>(M0.rows()), static_cast<long>(M0.cols())}, "unexpected matrix shape"});
    return report;
  }

  for (std::size_t i = 0; i < hermite; ++i)
    for (std::size_t j = 0; j < hermite; ++j)
      if (M0(i, j) != Rational(i == j ? 1 : 0))
        report.fail({"hermite-block-not-identity", {one_based(i), one_based(j)}, M0(i, j).to_string()});

  for (std::size_t i = 0; i < hermite; ++i)
    for (std::size_t j = hermite; j < last; ++j)
      if (!M0(i, j).is_zero())
        report.fail({"hermite-rows-on-bubbles", {one_based(i), one_based(j)}, M0(i, j).to_string()});

  for (std::size_t i = hermite; i < last; ++i)
    for (std::size_t j = i + 1; j < last; ++j)
      if (!M0(i, j).is_zero())
        report.fail({"bubble-block-not-lower-triangular", {one_based(i), one_based(j)}, M0(i, j).to_string()});

  for (std::size_t k = 0; k < size; ++k) {
    const Rational want(k == last ? 1 : 0);
    if (M0(last, k) != want) report.fail({"last-row", {one_based(last), one_based(k)}, M0(last, k).to_string()});
    if (k != last && M0(k, last) != want)
      report.fail({"last-column", {one_based(k), one_based(last)}, M0(k, last).to_string()});
  }

  for (std::size_t i = 0; i < size; ++i)
    if (M0(i, i).is_zero()) report.fail({"zero-diagonal", {one_based(i), one_based(i)}, "0/1"});

  if (rank(M0) != size) report.fail({"M0-singular", {}, "rank " + std::to_string(rank(M0))});
  if (rank(e.M1) != size - 1) report.fail({"M1-singular", {}, "rank " + std::to_string(rank(e.M1))});

  const RationalMatrix trimmed = M0.without_last_row_col();
  for (std::size_t i = 0; i + 1 < size; ++i)
    for (std::size_t j = 0; j + 1 < size; ++j)
      if (e.M1(i, j) != trimmed(i, j))
        report.fail({"M1-not-trimmed-M0", {one_based(i), one_based(j)},
                     e.M1(i, j).to_string() + " vs " + trimmed(i, j).to_string()});
  return report;
}

VerificationReport verify_lemma_hypotheses(const Element1D& e, int probe_degree) {
  if (probe_degree < e.n) throw InvalidParameter("probe degree must be >= n");
  VerificationReport report("lemma-hypotheses", mn(e));
  report.parameters.emplace_back("probe_degree", probe_degree);
  const auto r = static_cast<std::size_t>(e.rank_d());
  const auto size0 = r + 1;

  if (e.basis0.size() != size0 || e.basis1.size() != r || e.functionals0.size() != size0 ||
      e.functionals1.size() != r) {
    report.fail({"shape", {static_cast<long>(e.basis0.size()), static_cast<long>(e.basis1.size())},
                 "unexpected family sizes"});
    return report;
  }

  // (i) the kernel of d on P_n is the constants; basis0[n+1] must be one.
  const Polynomial& kernel = e.basis0[r];
  if (kernel.degree() != 0) report.fail({"(i) kernel-basis-not-constant", {one_based(r)}, to_string(kernel)});

  // (ii) separation of kernel and cokernel.
  for (std::size_t i = 0; i < r; ++i) {
    const Rational v = apply_functional(e.functionals0[i], kernel);
    if (!v.is_zero()) report.fail({"(ii) functional-sees-kernel", {one_based(i), one_based(r)}, v.to_string()});
  }
  for (std::size_t j = 0; j < r; ++j) {
    const Rational v = apply_functional(e.functionals0[r], e.basis0[j]);
    if (!v.is_zero()) report.fail({"(ii) kernel-functional-sees-cokernel", {one_based(r), one_based(j)}, v.to_string()});
  }

  // (iii) basis1 spans P_{n-1}.
  RationalMatrix coeffs(r, r);
  for (std::size_t j = 0; j < r; ++j) {
    if (e.basis1[j].degree() > e.n - 1) {
      report.fail({"(iii) range-basis-degree", {one_based(j)}, to_string(e.basis1[j])});
      continue;
    }
    for (std::size_t p = 0; p < r; ++p) coeffs(p, j) = e.basis1[j].coefficient(static_cast<int>(p));
  }
  if (const auto rk = rank(coeffs); rk != r)
    report.fail({"(iii) range-basis-rank-deficient", {static_cast<long>(rk)}, "rank " + std::to_string(rk)});

  // (iv) d phi0_j = phi1_j.
  for (std::size_t j = 0; j < r; ++j)
    if (differentiate(e.basis0[j]) != e.basis1[j])
      report.fail({"(iv) basis1-not-derivative", {one_based(j)}, to_string(differentiate(e.basis0[j]) - e.basis1[j])});

  // (v) N1_i(du) = N0_i(u) on probes.
  for (int a = 0; a <= probe_degree; ++a) {
    const Polynomial u = Polynomial::monomial(a);
    const Polynomial du = differentiate(u);
    for (std::size_t i = 0; i < r; ++i) {
      const Rational lhs = apply_functional(e.functionals1[i], du);
      const Rational rhs = apply_functional(e.functionals0[i], u);
      if (lhs != rhs)
        report.fail({"(v) functional-commutation", {one_based(i), a}, lhs.to_string() + " vs " + rhs.to_string()});
    }
  }
  return report;
}

VerificationReport verify_commutation(const Element1D& e, const std::vector<Polynomial>& probes) {
  VerificationReport report("commutation", mn(e));
  report.parameters.emplace_back("probes", static_cast<long>(probes.size()));
  for (std::size_t p = 0; p < probes.size(); ++p) {
    const Polynomial lhs = differentiate(interpolate(e, FormDegree::zero, probes[p]));
    const Polynomial rhs = interpolate(e, FormDegree::one, differentiate(probes[p]));
    const Polynomial residual = lhs - rhs;
    if (!residual.is_zero()) report.fail({"nonzero-residual", {one_based(p)}, to_string(residual)});
  }
  return report;
}

VerificationReport verify_projection(const Element1D& e) {
  VerificationReport report("projection", mn(e));
  for (int a = 0; a <= e.n; ++a) {
    const Polynomial u = Polynomial::monomial(a);
    if (interpolate(e, FormDegree::zero, u) != u) report.fail({"I0-not-identity-on-monomial", {a}, to_string(u)});
    if (a < e.n && interpolate(e, FormDegree::one, u) != u)
      report.fail({"I1-not-identity-on-monomial", {a}, to_string(u)});
  }
  for (std::size_t j = 0; j < e.basis0.size(); ++j)
    if (interpolate(e, FormDegree::zero, e.basis0[j]) != e.basis0[j])
      report.fail({"I0-not-identity-on-basis", {one_based(j)}, to_string(e.basis0[j])});
  for (std::size_t j = 0; j < e.basis1.size(); ++j)
    if (interpolate(e, FormDegree::one, e.basis1[j]) != e.basis1[j])
      report.fail({"I1-not-identity-on-basis", {one_based(j)}, to_string(e.basis1[j])});
  return report;
}

double smooth_commutation_residual(const Element1D& e, const SmoothFunction1D& u, int quadrature_order) {
  const RealPolynomial lhs = interpolate_smooth(e, FormDegree::zero, u, quadrature_order).derivative();
  const RealPolynomial rhs = interpolate_smooth(e, FormDegree::one, u.differentiated(), quadrature_order);
  return sup_norm_on_grid(lhs - rhs);
}

VerificationReport verify_smooth_commutation(const Element1D& e, const SmoothFunction1D& u, int quadrature_order,
                                             double tolerance) {
  VerificationReport report("smooth-commutation", mn(e));
  report.parameters.emplace_back("quadrature_order", quadrature_order);
  const double residual = smooth_commutation_residual(e, u, quadrature_order);
  if (!(residual <= tolerance)) report.fail({"residual-above-tolerance", {}, real_string(residual)});
  return report;
}

double TwoCellInterpolant::derivative(int order, double x) const {
  // Both cells have unit width, so reference and physical derivatives agree.
  if (x <= 1.0) return left.derivative(order, x);
  return right.derivative(order, x - 1.0);
}

namespace {

RealPolynomial cell_interpolant(const Element1D& e, const SmoothFunction1D& u, double a, double h,
                                int quadrature_order) {
  const SmoothFunction1D ref = u.pulled_back(a, h);
  std::vector<double> values;
  values.reserve(e.functionals0.size());
  for (const auto& f : e.functionals0) {
    const auto* mo = std::get_if<Moment>(&f.kind);
    if (mo && mo->of_derivative && mo->legendre_index == 0) {
      // Shares the endpoint values with the neighbouring cell.
      values.push_back(ref.value(1.0) - ref.value(0.0));
    } else {
      values.push_back(apply_functional_smooth(f, ref, quadrature_order));
    }
  }
  const std::vector<double> coeffs = to_real(e.alpha0) * values;
  RealPolynomial p;
  for (std::size_t j = 0; j < e.basis0.size(); ++j) p += coeffs[j] * RealPolynomial(e.basis0[j]);
  return p;
}

}  // namespace

TwoCellInterpolant two_cell_interpolant(const Element1D& e, const PiecewiseSmooth1D& u, int quadrature_order) {
  if (u.left.max_order() < e.m || u.right.max_order() < e.m)
    throw MissingDerivative(e.m, std::min(u.left.max_order(), u.right.max_order()));
  return {cell_interpolant(e, u.left, 0.0, 1.0, quadrature_order),
          cell_interpolant(e, u.right, 1.0, 1.0, quadrature_order)};
}

VerificationReport two_cell_continuity_demo(const Element1D& e, const PiecewiseSmooth1D& u, double tolerance) {
  VerificationReport report("continuity-demo", mn(e));
  const TwoCellInterpolant interp = two_cell_interpolant(e, u, default_quadrature_order(e));
  for (int s = 0; s <= e.m; ++s) {
    const double in_left = u.left.derivative(s, 1.0);
    const double in_right = u.right.derivative(s, 1.0);
    if (std::abs(in_left - in_right) > tolerance * (1.0 + std::abs(in_left)))
      report.fail({"input-regularity", {s}, real_string(in_left - in_right)});
    const double left = interp.left.derivative(s, 1.0);
    const double right = interp.right.derivative(s, 0.0);
    if (!(std::abs(left - right) <= tolerance)) report.fail({"junction-mismatch", {s}, real_string(left - right)});
  }
  return report;
}

VerificationReport two_cell_continuity_demo(const Element1D& e, const SmoothFunction1D& u, double tolerance) {
  return two_cell_continuity_demo(e, PiecewiseSmooth1D{u, u}, tolerance);
}

}  // namespace fecc
