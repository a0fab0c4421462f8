#include <doctest.h>

#include <cmath>
#include <random>

#include "fecc/element.hpp"
#include "fecc/errors.hpp"
#include "fecc/fixtures.hpp"
#include "fecc/verify.hpp"
#include "oracles.hpp"

using namespace fecc;

namespace {

Polynomial P(std::initializer_list<Rational> c) { return Polynomial(std::vector<Rational>(c)); }
Rational R(long a, long b = 1) { return Rational(a, b); }

// Functional evaluation written directly from the definitions, with the
// Gram-Schmidt Legendre family and the monomial inner product.
Rational oracle_apply(const NodeFunctional& f, const Polynomial& u) {
  static const auto legendre_gs = oracle::gram_schmidt_legendre(24);
  if (const auto* e = std::get_if<EndpointDerivative>(&f.kind)) {
    Rational acc(0);
    for (int p = 0; p <= u.degree(); ++p)
      acc += u.coefficient(p) * oracle::monomial_derivative_at(p, e->order + (e->of_derivative ? 1 : 0), e->point);
    return acc;
  }
  if (const auto* mo = std::get_if<Moment>(&f.kind)) {
    Polynomial arg;
    for (int p = 1; mo->of_derivative && p <= u.degree(); ++p) arg += Polynomial::monomial(p - 1, u.coefficient(p) * R(p));
    if (!mo->of_derivative) arg = u;
    return oracle::inner(legendre_gs[static_cast<std::size_t>(mo->legendre_index)], arg);
  }
  return oracle::value_at_one(u) + u.coefficient(0);
}

RationalMatrix oracle_matrix(const std::vector<NodeFunctional>& fs, const std::vector<Polynomial>& basis) {
  RationalMatrix mat(fs.size(), basis.size());
  for (std::size_t i = 0; i < fs.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) mat(i, j) = oracle_apply(fs[i], basis[j]);
  return mat;
}

}  // namespace

TEST_CASE("build_element (m=0, n=1)") {
  const Element1D e = build_element(0, 1);
  REQUIRE(e.functionals0.size() == 2);
  CHECK(e.functionals0[0] == NodeFunctional{Moment{0, true}, FormDegree::zero});
  CHECK(e.functionals0[1] == NodeFunctional{EndpointSum{}, FormDegree::zero});
  CHECK(e.basis0 == std::vector<Polynomial>{P({R(-1, 2), 1}), P({R(1, 2)})});
  CHECK(oracle_matrix(e.functionals0, e.basis0) == RationalMatrix::identity(2));
  CHECK(e.M0 == RationalMatrix::identity(2));
  CHECK(e.functionals1 == std::vector<NodeFunctional>{{Moment{0, false}, FormDegree::one}});
  CHECK(e.basis1 == std::vector<Polynomial>{P({1})});
}

TEST_CASE("build_element (m=1, n=3)") {
  const Element1D e = build_element(1, 3);
  CHECK(e.basis0 == std::vector<Polynomial>{P({0, 1, -2, 1}), P({0, 0, -1, 1}), P({R(-1, 2), 0, 3, -2}),
                                            P({R(1, 2)})});
  CHECK(oracle_matrix(e.functionals0, e.basis0) == RationalMatrix::identity(4));
  CHECK(node_matrix(e, FormDegree::zero) == RationalMatrix::identity(4));
  CHECK(e.alpha0 == RationalMatrix::identity(4));
  CHECK(e.rank_d() == 3);
}

TEST_CASE("build_element (m=2, n=5) functional list") {
  const Element1D e = build_element(2, 5);
  std::vector<std::string> got;
  for (const auto& f : e.functionals0) got.push_back(describe(f));
  CHECK(got == std::vector<std::string>{"\\partial_x u(0)", "\\partial_x u(1)", "\\partial^2_x u(0)",
                                        "\\partial^2_x u(1)", "u(1)-u(0)", "u(1)+u(0)"});
  std::vector<std::string> got1;
  for (const auto& f : e.functionals1) got1.push_back(describe(f, "v"));
  CHECK(got1 == std::vector<std::string>{"v(0)", "v(1)", "\\partial_x v(0)", "\\partial_x v(1)",
                                         "\\int_0^1 v\\,\\dif x"});
}

TEST_CASE("build_element rejects invalid parameters") {
  CHECK_THROWS_AS(build_element(1, 2), InvalidParameter);
  CHECK_THROWS_AS(build_element(-1, 3), InvalidParameter);
  CHECK_THROWS_WITH_AS(build_element(2, 4), doctest::Contains("degree too low"), InvalidParameter);
}

TEST_CASE("built functionals satisfy the family invariants") {
  for (int m = 0; m <= 4; ++m)
    for (int n = 2 * m + 1; n <= 2 * m + 6; ++n) {
      const Element1D e = build_element(m, n);
      CHECK(e.functionals0.size() == static_cast<std::size_t>(n + 1));
      CHECK(e.functionals1.size() == static_cast<std::size_t>(n));
      for (const auto& f : e.functionals0) CHECK(validate(f, m).empty());
      for (const auto& f : e.functionals1) CHECK(validate(f, m).empty());
    }
  CHECK_FALSE(validate({EndpointSum{}, FormDegree::one}, 1).empty());
  CHECK_FALSE(validate({EndpointDerivative{0, 1, false}, FormDegree::one}, 1).empty());
  CHECK_FALSE(validate({EndpointDerivative{0, 0, false}, FormDegree::zero}, 1).empty());
  CHECK_FALSE(validate({Moment{0, false}, FormDegree::zero}, 1).empty());
}

TEST_CASE("apply_functional examples") {
  CHECK(apply_functional({Moment{0, true}, FormDegree::zero}, Polynomial::x()) == R(1));
  CHECK(apply_functional({EndpointDerivative{0, 1, false}, FormDegree::zero}, Polynomial::monomial(3)).is_zero());
  CHECK(apply_functional({Moment{1, false}, FormDegree::one}, P({-1, 2})) == R(1, 3));
}

TEST_CASE("property: the first moment of u' equals u(1) - u(0)") {
  std::mt19937_64 rng(11);
  const NodeFunctional first{Moment{0, true}, FormDegree::zero};
  for (int t = 0; t < 40; ++t) {
    const Polynomial u = oracle::random_polynomial(rng, 10);
    CHECK(apply_functional(first, u) == evaluate(u, R(1)) - evaluate(u, R(0)));
    for (const auto& f : build_element(2, 8).functionals0) CHECK(apply_functional(f, u) == oracle_apply(f, u));
  }
}

TEST_CASE("apply_functional_smooth examples") {
  const auto s = SmoothFunction1D::sin();
  CHECK(std::abs(apply_functional_smooth({EndpointDerivative{1, 2, false}, FormDegree::zero}, s, 4) + std::sin(1.0)) <=
        1e-15);
  CHECK(std::abs(apply_functional_smooth({Moment{0, true}, FormDegree::zero}, SmoothFunction1D::exp(), 10) -
                 (std::exp(1.0) - 1.0)) <= 1e-13);
  CHECK(std::abs(apply_functional_smooth({EndpointSum{}, FormDegree::zero}, SmoothFunction1D::cos(), 4) -
                 (1.0 + std::cos(1.0))) <= 1e-15);
  const SmoothFunction1D limited([](int, double x) { return x; }, 1);
  CHECK_THROWS_AS(apply_functional_smooth({EndpointDerivative{0, 2, false}, FormDegree::zero}, limited, 4),
                  MissingDerivative);
  CHECK_THROWS_AS(apply_functional_smooth({EndpointSum{}, FormDegree::zero}, limited, 0), InvalidParameter);
}

TEST_CASE("node matrices: stored matrices match the oracle, M1 is M0 trimmed") {
  for (int m = 0; m <= 3; ++m)
    for (int n = 2 * m + 1; n <= 2 * m + 4; ++n) {
      const Element1D e = build_element(m, n);
      CHECK(e.M0 == oracle_matrix(e.functionals0, e.basis0));
      CHECK(e.M1 == oracle_matrix(e.functionals1, e.basis1));
      CHECK(e.M1 == e.M0.without_last_row_col());
      CHECK(e.alpha0 * e.M0 == RationalMatrix::identity(e.M0.rows()));
      CHECK(e.alpha1 * e.M1 == RationalMatrix::identity(e.M1.rows()));
    }
}

TEST_CASE("node matrix (m=0, n=3, k=1): bubble entries above the diagonal vanish") {
  const Element1D e = build_element(0, 3);
  const RationalMatrix& M1 = node_matrix(e, FormDegree::one);
  REQUIRE(M1.rows() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK_FALSE(M1(i, i).is_zero());
    for (std::size_t j = i + 1; j < 3; ++j) CHECK(M1(i, j).is_zero());
  }
}

TEST_CASE("basis degree bookkeeping") {
  for (int m = 0; m <= 4; ++m)
    for (int n = 2 * m + 1; n <= 2 * m + 6; ++n) {
      const Element1D e = build_element(m, n);
      for (int j = 1; j <= 2 * m + 1; ++j) CHECK(e.basis0[static_cast<std::size_t>(j - 1)].degree() <= 2 * m + 1);
      for (int j = 2; j <= n - 2 * m; ++j) CHECK(e.basis0[static_cast<std::size_t>(2 * m + j - 1)].degree() == 2 * m + j);
      CHECK(e.basis0.back() == P({R(1, 2)}));
      for (const auto& p : e.basis1) CHECK(p.degree() <= n - 1);
    }
}

TEST_CASE("verify_unisolvence") {
  CHECK(verify_unisolvence(build_element(2, 7)).pass);
  const Element1D e01 = build_element(0, 1);
  CHECK(verify_unisolvence(e01).pass);
  CHECK(e01.M0 == RationalMatrix::identity(2));
  // degenerate n = 2m+1 (empty bubble block)
  for (int m = 0; m <= 4; ++m) CHECK(verify_unisolvence(build_element(m, 2 * m + 1)).pass);

  const auto bad = verify_unisolvence(fixtures::swapped_basis_rows(build_element(1, 4)));
  CHECK_FALSE(bad.pass);
  REQUIRE_FALSE(bad.witness.empty());
  bool has_12 = false;
  for (const auto& w : bad.witness) has_12 = has_12 || w.indices == std::vector<long>{1, 2};
  CHECK(has_12);
}

TEST_CASE("verify_lemma_hypotheses") {
  CHECK(verify_lemma_hypotheses(build_element(1, 4), 8).pass);
  CHECK(verify_lemma_hypotheses(build_element(0, 2), 7).pass);
  CHECK_THROWS_AS(verify_lemma_hypotheses(build_element(1, 4), 3), InvalidParameter);

  const auto bad = verify_lemma_hypotheses(fixtures::wrong_functional_order(build_element(1, 4)), 8);
  CHECK_FALSE(bad.pass);
  CHECK(bad.has_witness_kind("(v) functional-commutation"));
  CHECK(bad.witness.front().indices.front() == 1);
  CHECK_THROWS_AS(fixtures::wrong_functional_order(build_element(0, 3)), InvalidParameter);
}

TEST_CASE("interpolate: projection and the x^4 example") {
  const Element1D e = build_element(1, 3);
  CHECK(interpolate(e, FormDegree::zero, Polynomial::monomial(3)) == Polynomial::monomial(3));

  // Independent route: solve N_i(p) = N_i(x^4) for the monomial coefficients of p in P_3.
  const Polynomial u = Polynomial::monomial(4);
  std::vector<std::vector<Rational>> a;
  std::vector<Rational> b;
  for (const auto& f : e.functionals0) {
    std::vector<Rational> row;
    for (int p = 0; p <= 3; ++p) row.push_back(oracle_apply(f, Polynomial::monomial(p)));
    a.push_back(row);
    b.push_back(oracle_apply(f, u));
  }
  const Polynomial expected(*oracle::solve(a, b));
  const Polynomial got = interpolate(e, FormDegree::zero, u);
  CHECK(got == expected);
  CHECK(got == P({0, 0, -1, 2}));
  for (const auto& f : e.functionals0) CHECK(apply_functional(f, got) == apply_functional(f, u));

  CHECK(interpolate(build_element(0, 1), FormDegree::one, P({1})) == P({1}));
}

TEST_CASE("verify_projection over the grid") {
  for (int m = 0; m <= 3; ++m)
    for (int n = 2 * m + 1; n <= 2 * m + 4; ++n) CHECK(verify_projection(build_element(m, n)).pass);
}

TEST_CASE("interpolate_smooth") {
  const Element1D e = build_element(1, 3);
  const RealPolynomial got = interpolate_smooth(e, FormDegree::zero, SmoothFunction1D::sin(), 8);
  // M0 = identity, so the cubic is sum_i N_i(sin) * phi_i with closed-form values.
  const double v[4] = {std::cos(0.0), std::cos(1.0), std::sin(1.0) - std::sin(0.0), std::sin(1.0) + std::sin(0.0)};
  RealPolynomial expected;
  for (std::size_t i = 0; i < 4; ++i) expected += v[i] * RealPolynomial(e.basis0[i]);
  REQUIRE(got.coefficients().size() == expected.coefficients().size());
  for (std::size_t i = 0; i < expected.coefficients().size(); ++i)
    CHECK(std::abs(got.coefficients()[i] - expected.coefficients()[i]) <= 1e-14);

  const Polynomial x2 = Polynomial::monomial(2);
  const RealPolynomial smooth = interpolate_smooth(e, FormDegree::zero, SmoothFunction1D::from_polynomial(x2), 8);
  const RealPolynomial exact(interpolate(e, FormDegree::zero, x2));
  for (std::size_t i = 0; i < exact.coefficients().size(); ++i)
    CHECK(std::abs(smooth.coefficients()[i] - exact.coefficients()[i]) <= 1e-14);

  CHECK(smooth_commutation_residual(e, SmoothFunction1D::exp(), 12) <= 1e-12);
  const SmoothFunction1D value_only([](int, double x) { return x; }, 0);
  CHECK_THROWS_AS(interpolate_smooth(e, FormDegree::zero, value_only, 8), MissingDerivative);
}

TEST_CASE("verify_commutation") {
  const Element1D e = build_element(2, 6);
  CHECK(verify_commutation(e, monomial_probes(e.n + 5)).pass);
  CHECK(verify_commutation(e, {P({R(5, 3)})}).pass);
  CHECK(differentiate(interpolate(e, FormDegree::zero, P({R(5, 3)}))).is_zero());

  const auto bad = verify_commutation(fixtures::permuted_alpha1_rows(e), monomial_probes(e.n + 5));
  CHECK_FALSE(bad.pass);
  CHECK(bad.has_witness_kind("nonzero-residual"));
}

TEST_CASE("smooth commutation for sin and exp") {
  for (auto [m, n] : {std::pair{1, 3}, std::pair{2, 5}}) {
    const Element1D e = build_element(m, n);
    CHECK(verify_smooth_commutation(e, SmoothFunction1D::sin(), 12).pass);
    CHECK(verify_smooth_commutation(e, SmoothFunction1D::exp(), 12).pass);
  }
}

TEST_CASE("two-cell continuity demo") {
  SUBCASE("global polynomial is reproduced on both cells") {
    const Element1D e = build_element(2, 6);
    const auto u = SmoothFunction1D::from_polynomial(P({1, -2, 0, R(1, 3), 0, 0, R(1, 7)}));
    const auto rep = two_cell_continuity_demo(e, u);
    CHECK(rep.pass);
    const auto interp = two_cell_interpolant(e, {u, u}, 16);
    for (double x : {0.3, 1.0, 1.7}) CHECK(std::abs(interp.derivative(0, x) - u.value(x)) <= 1e-12);
  }
  SUBCASE("sin with m=1, n=3") {
    const auto rep = two_cell_continuity_demo(build_element(1, 3), SmoothFunction1D::sin(), 1e-13);
    CHECK(rep.pass);
  }
  SUBCASE("|x-1|(x-1)^2 is C^2 but not C^3") {
    const auto left = SmoothFunction1D::from_polynomial(P({1, -3, 3, -1}));
    const auto right = SmoothFunction1D::from_polynomial(P({-1, 3, -3, 1}));
    CHECK(two_cell_continuity_demo(build_element(2, 5), PiecewiseSmooth1D{left, right}).pass);
    const auto rep = two_cell_continuity_demo(build_element(3, 7), PiecewiseSmooth1D{left, right});
    CHECK_FALSE(rep.pass);
    CHECK(rep.has_witness_kind("input-regularity"));
    for (const auto& w : rep.witness) CHECK(w.indices == std::vector<long>{3});
  }
  SUBCASE("|x-1|(x-1) lacks C^2") {
    const auto left = SmoothFunction1D::from_polynomial(P({-1, 2, -1}));
    const auto right = SmoothFunction1D::from_polynomial(P({1, -2, 1}));
    const auto rep = two_cell_continuity_demo(build_element(2, 5), PiecewiseSmooth1D{left, right});
    CHECK_FALSE(rep.pass);
    CHECK(rep.has_witness_kind("input-regularity"));
    CHECK(rep.has_witness_kind("junction-mismatch"));
    for (const auto& w : rep.witness) CHECK(w.indices == std::vector<long>{2});
  }
  SUBCASE("missing derivatives") {
    const SmoothFunction1D value_only([](int, double x) { return x; }, 0);
    CHECK_THROWS_AS(two_cell_continuity_demo(build_element(1, 3), value_only), MissingDerivative);
  }
}
