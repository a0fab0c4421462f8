#include <doctest.h>

#include <algorithm>
#include <cctype>
#include <cmath>

#include "fecc/errors.hpp"
#include "fecc/tensor.hpp"
#include "fecc/tensor_verify.hpp"
#include "oracles.hpp"

using namespace fecc;

namespace {

Polynomial P(std::initializer_list<Rational> c) { return Polynomial(std::vector<Rational>(c)); }
Rational R(long a, long b = 1) { return Rational(a, b); }
const Polynomial X = Polynomial::x();

CharacteristicVector chi(std::initializer_list<int> bits) { return {std::vector<int>(bits)}; }

std::string strip(std::string s) {
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
  return s;
}

RankOneForm r1(Rational w, std::vector<std::pair<FormDegree, Polynomial>> f) { return {std::move(w), std::move(f)}; }

bool same_terms(const std::vector<RankOneForm>& a, const std::vector<RankOneForm>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].weight != b[i].weight || a[i].factors != b[i].factors) return false;
  return true;
}

bool polynomial_forms_equal(const PolynomialForm& a, const PolynomialForm& b) {
  PolynomialForm diff = a;
  diff.accumulate(b, R(-1));
  return diff.is_zero();
}

constexpr auto k0 = FormDegree::zero;
constexpr auto k1 = FormDegree::one;

}  // namespace

TEST_CASE("enumerate_chi") {
  CHECK(enumerate_chi(2, 1) == std::vector<CharacteristicVector>{chi({0, 1}), chi({1, 0})});
  CHECK(enumerate_chi(3, 0) == std::vector<CharacteristicVector>{chi({0, 0, 0})});
  CHECK(static_cast<long>(enumerate_chi(4, 2).size()) == oracle::binomial_by_enumeration(4, 2));
  for (int N = 1; N <= 5; ++N)
    for (int nu = 0; nu <= N; ++nu) {
      const auto all = enumerate_chi(N, nu);
      CHECK(static_cast<long>(all.size()) == oracle::binomial_by_enumeration(N, nu));
      CHECK(std::is_sorted(all.begin(), all.end()));
      CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
      for (const auto& c : all) CHECK(c.weight() == nu);
    }
  CHECK_THROWS_AS(enumerate_chi(2, 3), InvalidParameter);
  CHECK_THROWS_AS(enumerate_chi(2, -1), InvalidParameter);
}

TEST_CASE("space_dimension") {
  const Element1D e5 = build_element(2, 5);
  CHECK(space_dimension(2, 0, e5) == 36);
  CHECK(space_dimension(2, 1, e5) == 60);
  CHECK(tensor_basis(2, 1, e5).size() == 60);
  CHECK(space_dimension(3, 3, build_element(1, 4)) == 64);
  for (int N = 1; N <= 3; ++N)
    for (int nu = 0; nu <= N; ++nu) {
      const Element1D e = build_element(1, 3);
      CHECK(space_dimension(N, nu, e) == tensor_basis(N, nu, e).size());
      CHECK(space_dimension(N, nu, e) == tensor_functionals(N, nu, e).size());
    }
}

TEST_CASE("theta signs") {
  CHECK(theta(chi({0, 0}), 1) == 1);
  CHECK(theta(chi({1, 0}), 1) == -1);
  CHECK(theta(chi({1, 1, 0}), 2) == 1);
  CHECK(theta(chi({0, 1, 0}), 2) == -1);
  CHECK(theta(chi({1, 0}), 1, ThetaSign::flipped) == 1);
}

TEST_CASE("exterior derivative of rank-one forms in 2D") {
  const Polynomial u = P({0, 0, 1});
  const Polynomial v = P({0, 0, 0, 1});
  CHECK(same_terms(exterior_derivative(r1(R(1), {{k0, u}, {k0, v}})),
                   {r1(R(1), {{k1, P({0, 2})}, {k0, v}}), r1(R(1), {{k0, u}, {k1, P({0, 0, 3})}})}));
  CHECK(same_terms(exterior_derivative(r1(R(1), {{k0, u}, {k1, v}})), {r1(R(1), {{k1, P({0, 2})}, {k1, v}})}));
  CHECK(same_terms(exterior_derivative(r1(R(1), {{k1, u}, {k0, v}})), {r1(R(-1), {{k1, u}, {k1, P({0, 0, 3})}})}));
  CHECK(exterior_derivative(r1(R(1), {{k1, u}, {k1, v}})).empty());
}

TEST_CASE("dd = 0 on x (x) x (x) x, expanded by hand") {
  const RankOneForm u = r1(R(1), {{k0, X}, {k0, X}, {k0, X}});
  const Polynomial one = P({1});
  CHECK(same_terms(exterior_derivative(u), {r1(R(1), {{k1, one}, {k0, X}, {k0, X}}),
                                            r1(R(1), {{k0, X}, {k1, one}, {k0, X}}),
                                            r1(R(1), {{k0, X}, {k0, X}, {k1, one}})}));
  // Second application, per term: 100 -> -110, -101; 010 -> +110, -011; 001 -> +101, +011.
  std::vector<RankOneForm> second;
  for (const auto& t : exterior_derivative(u))
    for (const auto& s : exterior_derivative(t)) second.push_back(s);
  REQUIRE(second.size() == 6);
  const std::vector<long> signs{-1, -1, 1, -1, 1, 1};
  for (std::size_t i = 0; i < 6; ++i) CHECK(second[i].weight == R(signs[i]));

  PolynomialForm total;
  for (const auto& s : second) total.accumulate(to_polynomial_form(s));
  CHECK(total.is_zero());
  CHECK(exterior_derivative(exterior_derivative(to_polynomial_form(u))).is_zero());
  CHECK_FALSE(exterior_derivative(exterior_derivative(to_polynomial_form(u), ThetaSign::flipped), ThetaSign::flipped)
                  .is_zero());
}

TEST_CASE("finite element and monomial derivatives agree") {
  const Element1D e = build_element(1, 4);
  const RationalMatrix d1 = derivative_matrix(e);
  for (int nu = 0; nu <= 2; ++nu)
    for (const auto& b : tensor_basis(2, nu, e)) {
      const TensorForm coeffs = tensor_interpolate(b, e);
      CHECK(polynomial_forms_equal(to_polynomial_form(coeffs, e), to_polynomial_form(b)));
      CHECK(polynomial_forms_equal(to_polynomial_form(exterior_derivative(coeffs, d1), e),
                                   exterior_derivative(to_polynomial_form(b))));
    }
}

TEST_CASE("apply_tensor_functional on rank-one polynomials, n=5 m=2") {
  const Element1D e = build_element(2, 5);
  const auto f0 = tensor_functionals(2, 0, e);
  const auto f2 = tensor_functionals(2, 2, e);
  const Polynomial u = P({3, 1, 1});
  const Polynomial v = P({R(1, 2), 2, 0, -1});
  // N^{00}_{11}(u (x) v) = u'(0) v'(0), values by the falling-factorial oracle.
  auto d_at = [](const Polynomial& p, int order, int point) {
    Rational acc(0);
    for (int a = 0; a <= p.degree(); ++a) acc += p.coefficient(a) * oracle::monomial_derivative_at(a, order, point);
    return acc;
  };
  CHECK(apply_tensor_functional(f0[0], r1(R(1), {{k0, u}, {k0, v}})) == d_at(u, 1, 0) * d_at(v, 1, 0));
  // N^{11}_{15}(u (x) v) = u(0) int v.
  CHECK(apply_tensor_functional(f2[4], r1(R(1), {{k1, u}, {k1, v}})) == d_at(u, 0, 0) * oracle::inner(P({1}), v));
  // Mismatched characteristic vector.
  CHECK(apply_tensor_functional(f0[0], r1(R(1), {{k1, u}, {k1, v}})).is_zero());

  // The polynomial-form and finite-element routes agree.
  const RankOneForm w = r1(R(2, 3), {{k0, P({1, 1})}, {k0, P({0, 0, 1})}});
  const TensorForm wc = tensor_interpolate(w, e);
  for (const auto& f : f0) {
    CHECK(apply_tensor_functional(f, to_polynomial_form(w)) == apply_tensor_functional(f, w));
    CHECK(apply_tensor_functional(f, wc, e) == apply_tensor_functional(f, w));
  }
}

TEST_CASE("tensor functional descriptors for n=5, m=2") {
  const Element1D e = build_element(2, 5);
  auto first_row = [&](int nu) {
    std::vector<std::string> out;
    for (const auto& f : tensor_functionals(2, nu, e))
      if (f.indices[0] == 1) out.push_back(strip(describe(f)));
    return out;
  };
  CHECK(first_row(0) == std::vector<std::string>{
                            "\\partial_xu(0)\\partial_yv(0)", "\\partial_xu(0)\\partial_yv(1)",
                            "\\partial_xu(0)\\partial^2_yv(0)", "\\partial_xu(0)\\partial^2_yv(1)",
                            "\\partial_xu(0)(v(1)-v(0))", "\\partial_xu(0)(v(1)+v(0))"});
  // nu = 1 lists chi (0,1) first, then (1,0); the first five belong to (0,1).
  const auto row1 = first_row(1);
  CHECK(std::vector<std::string>(row1.begin(), row1.begin() + 5) ==
        std::vector<std::string>{"\\partial_xu(0)v(0)", "\\partial_xu(0)v(1)", "\\partial_xu(0)\\partial_yv(0)",
                                 "\\partial_xu(0)\\partial_yv(1)", "\\partial_xu(0)\\int_0^1v\\,\\difx"});
  CHECK(first_row(2) == std::vector<std::string>{"u(0)v(0)", "u(0)v(1)", "u(0)\\partial_yv(0)",
                                                 "u(0)\\partial_yv(1)", "u(0)\\int_0^1v\\,\\difx"});

  std::vector<std::string> smooth;
  for (const auto& f : tensor_functionals(2, 0, e))
    if (f.indices[0] == 1) smooth.push_back(strip(describe_smooth(f)));
  CHECK(smooth == std::vector<std::string>{"\\partial_x\\partial_yu(0,0)", "\\partial_x\\partial_yu(0,1)",
                                           "\\partial_x\\partial^2_yu(0,0)", "\\partial_x\\partial^2_yu(0,1)",
                                           "\\partial_xu(0,1)-\\partial_xu(0,0)",
                                           "\\partial_xu(0,1)+\\partial_xu(0,0)"});
}

TEST_CASE("apply_tensor_functional on smooth 2D input") {
  const Element1D e = build_element(2, 5);
  const auto f0 = tensor_functionals(2, 0, e);
  // u(x, y) = sin(x) exp(y) + x^2 y^3, not rank one.
  const SmoothFunctionND u = SmoothFunctionND::linear_combination(
      {{1.0, SmoothFunctionND::product({SmoothFunction1D::sin(), SmoothFunction1D::exp()})},
       {1.0, SmoothFunctionND::product(std::vector<Polynomial>{P({0, 0, 1}), P({0, 0, 0, 1})})}});
  const SmoothForm form = SmoothForm::scalar(u);
  auto dx = [](double y) { return std::cos(0.0) * std::exp(y); };  // d/dx at x=0; the x^2 y^3 term vanishes there
  CHECK(std::abs(apply_tensor_functional(f0[4], form, 12) - (dx(1.0) - dx(0.0))) <= 1e-14);
  CHECK(std::abs(apply_tensor_functional(f0[5], form, 12) - (dx(1.0) + dx(0.0))) <= 1e-14);
  CHECK(std::abs(apply_tensor_functional(f0[0], form, 12) - 1.0) <= 1e-14);

  const SmoothFunctionND limited(2, [](std::span<const int>, std::span<const double>) { return 0.0; }, 0);
  CHECK_THROWS_AS(apply_tensor_functional(f0[0], SmoothForm::scalar(limited), 12), MissingDerivative);
}

TEST_CASE("tensor_interpolate") {
  const Element1D e = build_element(1, 3);
  SUBCASE("projection on rank-one polynomials of degree <= n") {
    const RankOneForm u = r1(R(1), {{k0, P({1, 2, 0, -1})}, {k0, P({0, R(1, 3), 1})}});
    CHECK(polynomial_forms_equal(to_polynomial_form(tensor_interpolate(u, e), e), to_polynomial_form(u)));
  }
  SUBCASE("x^{n+1} (x) x factorizes") {
    const RankOneForm u = r1(R(1), {{k0, Polynomial::monomial(4)}, {k0, X}});
    const RankOneForm expected = r1(R(1), {{k0, interpolate(e, k0, Polynomial::monomial(4))}, {k0, X}});
    CHECK(polynomial_forms_equal(to_polynomial_form(tensor_interpolate(u, e), e), to_polynomial_form(expected)));
  }
  SUBCASE("nu = N has a single block") {
    const TensorForm t = tensor_interpolate(r1(R(1), {{k1, X}, {k1, X}}), e);
    CHECK(t.blocks.size() == 1);
  }
  SUBCASE("general polynomial forms agree with the rank-one route") {
    const RankOneForm a = r1(R(2), {{k0, Polynomial::monomial(5)}, {k1, P({1, 1})}});
    const RankOneForm b = r1(R(-1, 3), {{k1, Polynomial::monomial(4)}, {k0, P({0, 0, 1})}});
    PolynomialForm sum = to_polynomial_form(a);
    sum.accumulate(to_polynomial_form(b));
    const TensorForm general = tensor_interpolate(2, 1, sum, e);
    TensorForm split = tensor_interpolate(a, e);
    for (const auto& [c, block] : tensor_interpolate(b, e).blocks) split.blocks.at(c).accumulate(block, R(1));
    CHECK(general.blocks == split.blocks);
    CHECK_THROWS_AS(tensor_interpolate(2, 0, sum, e), InvalidParameter);
  }
}

TEST_CASE("tensor node matrices are Kronecker products") {
  const Element1D e = build_element(1, 3);
  for (int nu = 0; nu <= 2; ++nu)
    for (const auto& c : enumerate_chi(2, nu)) {
      const RationalMatrix direct = tensor_node_matrix(c, e);
      CHECK(direct == kronecker_node_matrix(c, e));
      CHECK(inverse(direct).has_value());
    }
  CHECK(verify_tensor_dimensions(2, build_element(2, 5)).pass);
  CHECK(verify_tensor_dimensions(3, build_element(0, 2), 27).pass);
}

TEST_CASE("verify_tensor_commutation") {
  for (int m = 0; m <= 2; ++m) {
    const Element1D e = build_element(m, 2 * m + 1);
    CHECK(verify_tensor_commutation(2, 0, tensor_monomial_probes(2, 0, e.n + 3), e).pass);
  }
  const Element1D e = build_element(1, 3);
  const RankOneForm u = r1(R(1), {{k0, P({1, 0, 0, 0, 1})}, {k1, P({0, 2, 0, 0, 0, 1})}, {k0, P({R(1, 2), 0, 1})}});
  CHECK(verify_tensor_commutation(3, 1, {u}, e).pass);
  CHECK(verify_tensor_commutation(2, 2, tensor_monomial_probes(2, 2, 4), e).pass);
  // Both sides share the same derivative, so the flipped sign does not break commutation.
  CHECK(verify_tensor_commutation(2, 0, tensor_monomial_probes(2, 0, 5), e, ThetaSign::flipped).pass);
}

TEST_CASE("verify_dd_zero") {
  CHECK(verify_dd_zero(2, build_element(1, 3)).pass);
  for (int m = 0; m <= 1; ++m) CHECK(verify_dd_zero(3, build_element(m, 2 * m + 1)).pass);
  CHECK(verify_dd_zero(1, build_element(0, 1)).pass);
  const auto bad = verify_dd_zero(2, build_element(1, 3), ThetaSign::flipped);
  CHECK_FALSE(bad.pass);
  CHECK(bad.has_witness_kind("dd-nonzero"));
}

TEST_CASE("smooth tensor commutation") {
  const Element1D e = build_element(1, 3);
  const SmoothForm u =
      SmoothForm::scalar(SmoothFunctionND::product({SmoothFunction1D::sin(), SmoothFunction1D::exp()}));
  CHECK(tensor_smooth_commutation_residual(u, e, 12) <= 1e-11);
}
