// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fecc/element.hpp"
#include "fecc/families.hpp"
#include "fecc/fixtures.hpp"
#include "fecc/tensor.hpp"
#include "fecc/tensor_verify.hpp"
#include "fecc/verify.hpp"
#include "oracles.hpp"

using namespace fecc;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
  void require(const VerificationReport& r) {
    if (r.pass) return;
    std::ostringstream os;
    os << r.property;
    for (const auto& [k, v] : r.parameters) os << ' ' << k << '=' << v;
    if (!r.witness.empty()) {
      const auto& w = r.witness.front();
      os << ": " << w.kind << " [";
      for (std::size_t i = 0; i < w.indices.size(); ++i) os << (i ? "," : "") << w.indices[i];
      os << "] " << w.value;
    }
    fail(os.str());
  }
};

struct GridPoint {
  int m;
  int n;
};

std::vector<GridPoint> unisolvence_grid() {
  std::vector<GridPoint> g;
  for (int m = 0; m <= 4; ++m)
    for (int n = 2 * m + 1; n <= 2 * m + 6; ++n) g.push_back({m, n});
  return g;
}

std::vector<GridPoint> tensor_grid() {
  std::vector<GridPoint> g;
  for (int m = 0; m <= 2; ++m)
    for (int n = 2 * m + 1; n <= 2 * m + 3; ++n) g.push_back({m, n});
  return g;
}

std::string strip(const std::string& s) {
  std::string out;
  for (char c : s)
    if (c != ' ') out += c;
  return out;
}

int failures = 0;

void criterion(int k, const std::string& title, double budget_seconds, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o = body();
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (budget_seconds > 0 && seconds > budget_seconds) {
    std::ostringstream os;
    os << "took " << seconds << " s, budget " << budget_seconds << " s";
    o.fail(os.str());
  }
  if (!o.pass) ++failures;
  std::printf("%s criterion %d: %s (%.2f s)%s%s\n", o.pass ? "PASS" : "FAIL", k, title.c_str(), seconds,
              o.pass ? "" : " -- ", o.detail.c_str());
  std::fflush(stdout);
}

Outcome unisolvence() {
  Outcome o;
  for (const auto [m, n] : unisolvence_grid()) o.require(verify_unisolvence(build_element(m, n)));
  return o;
}

Outcome lemma_hypotheses() {
  Outcome o;
  for (const auto [m, n] : unisolvence_grid()) o.require(verify_lemma_hypotheses(build_element(m, n), n + 5));
  return o;
}

Outcome commutation() {
  Outcome o;
  std::mt19937_64 rng(2024);
  for (const auto [m, n] : unisolvence_grid()) {
    std::vector<Polynomial> probes = monomial_probes(n + 5);
    for (int t = 0; t < 8; ++t) probes.push_back(oracle::random_polynomial(rng, n + 5));
    o.require(verify_commutation(build_element(m, n), probes));
  }
  return o;
}

Outcome projection() {
  Outcome o;
  std::mt19937_64 rng(99);
  for (const auto [m, n] : unisolvence_grid()) {
    const Element1D e = build_element(m, n);
    o.require(verify_projection(e));
    for (int t = 0; t < 6; ++t) {
      const Polynomial p0 = oracle::random_polynomial(rng, n);
      const Polynomial p1 = oracle::random_polynomial(rng, n - 1);
      if (interpolate(e, FormDegree::zero, p0) != p0) o.fail("I0 changed a polynomial of degree <= n");
      if (interpolate(e, FormDegree::one, p1) != p1) o.fail("I1 changed a polynomial of degree <= n-1");
    }
  }
  return o;
}

Outcome legendre_identities() {
  Outcome o;
  const auto gs = oracle::gram_schmidt_legendre(24);
  for (int j = 0; j <= 21; ++j)
    if (legendre(j) != gs[static_cast<std::size_t>(j)]) o.fail("legendre(" + std::to_string(j) + ") differs");
  for (int j = 1; j <= 20; ++j) {
    Polynomial lhs = iterated_legendre_integral(1, j);
    lhs *= Rational(2 * (2 * j + 1));
    Polynomial rhs = gs[static_cast<std::size_t>(j + 1)];
    rhs -= gs[static_cast<std::size_t>(j - 1)];
    if (lhs != rhs) o.fail("integral identity fails at j=" + std::to_string(j));
  }
  for (int i = 0; i <= 20; ++i) {
    const Polynomial li = legendre(i);
    if (oracle::value_at_one(li) != Rational(1)) o.fail("l_" + std::to_string(i) + "(1) != 1");
    for (int j = 0; j < i; ++j)
      if (!oracle::inner(li, legendre(j)).is_zero())
        o.fail("l_" + std::to_string(i) + " not orthogonal to l_" + std::to_string(j));
  }
  // Coefficients of L^m_j against the Gram-Schmidt family: nonzero only at
  // j-m, j-m+2, ..., j+m.
  for (int m = 0; m <= 4; ++m)
    for (int j = std::max(m, 1); j <= 10; ++j) {
      const Polynomial L = iterated_legendre_integral(m, j);
      if (L.degree() != j + m) o.fail("deg L^m_j != j+m");
      for (int i = 0; i <= j + m; ++i) {
        const Rational c = Rational(2 * i + 1) * oracle::inner(L, gs[static_cast<std::size_t>(i)]);
        const bool in_band = i >= j - m && (i - (j - m)) % 2 == 0;
        if (!in_band && !c.is_zero())
          o.fail("L^" + std::to_string(m) + "_" + std::to_string(j) + " has coefficient at " + std::to_string(i));
        if ((i == j - m || i == j + m) && c.is_zero()) o.fail("band edge vanishes");
      }
      if (legendre_expansion(L).size() != static_cast<std::size_t>(j + m + 1)) o.fail("expansion length");
    }
  return o;
}

Outcome dd_zero() {
  Outcome o;
  for (int N = 2; N <= 3; ++N)
    for (const auto [m, n] : tensor_grid()) o.require(verify_dd_zero(N, build_element(m, n)));
  return o;
}

Outcome tensor_commutation() {
  Outcome o;
  for (int N = 2; N <= 3; ++N)
    for (const auto [m, n] : tensor_grid()) {
      const Element1D e = build_element(m, n);
      for (int nu = 0; nu <= N; ++nu)
        o.require(verify_tensor_commutation(N, nu, tensor_monomial_probes(N, nu, n + 3), e));
    }
  return o;
}

Outcome example_descriptors() {
  Outcome o;
  const Element1D e = build_element(2, 5);
  auto first_row = [&](int nu, bool smooth) {
    std::vector<std::string> out;
    for (const auto& f : tensor_functionals(2, nu, e))
      if (f.indices[0] == 1) out.push_back(strip(smooth ? describe_smooth(f) : describe(f)));
    return out;
  };
  const std::vector<std::string> k0{"\\partial_xu(0)\\partial_yv(0)",  "\\partial_xu(0)\\partial_yv(1)",
                                    "\\partial_xu(0)\\partial^2_yv(0)", "\\partial_xu(0)\\partial^2_yv(1)",
                                    "\\partial_xu(0)(v(1)-v(0))",       "\\partial_xu(0)(v(1)+v(0))"};
  const std::vector<std::string> k1{"\\partial_xu(0)v(0)", "\\partial_xu(0)v(1)", "\\partial_xu(0)\\partial_yv(0)",
                                    "\\partial_xu(0)\\partial_yv(1)", "\\partial_xu(0)\\int_0^1v\\,\\difx"};
  const std::vector<std::string> k2{"u(0)v(0)", "u(0)v(1)", "u(0)\\partial_yv(0)", "u(0)\\partial_yv(1)",
                                    "u(0)\\int_0^1v\\,\\difx"};
  const std::vector<std::string> smooth{"\\partial_x\\partial_yu(0,0)",       "\\partial_x\\partial_yu(0,1)",
                                        "\\partial_x\\partial^2_yu(0,0)",     "\\partial_x\\partial^2_yu(0,1)",
                                        "\\partial_xu(0,1)-\\partial_xu(0,0)", "\\partial_xu(0,1)+\\partial_xu(0,0)"};
  if (first_row(0, false) != k0) o.fail("k=0 list differs");
  const auto row1 = first_row(1, false);  // chi (0,1) comes first
  if (row1.size() < 5 || std::vector<std::string>(row1.begin(), row1.begin() + 5) != k1) o.fail("k=1 list differs");
  if (first_row(2, false) != k2) o.fail("k=2 list differs");
  if (first_row(0, true) != smooth) o.fail("smooth k=0 list differs");

  // N^{00}_{15} on u(x,y) = sin(x) exp(y) + x^2 y^3: d/dx at x=0 is exp(y).
  const SmoothFunctionND u = SmoothFunctionND::linear_combination(
      {{1.0, SmoothFunctionND::product({SmoothFunction1D::sin(), SmoothFunction1D::exp()})},
       {1.0, SmoothFunctionND::product(std::vector<Polynomial>{Polynomial::monomial(2), Polynomial::monomial(3)})}});
  const auto f0 = tensor_functionals(2, 0, e);
  const double value = apply_tensor_functional(f0[4], SmoothForm::scalar(u), 12);
  if (std::abs(value - (std::exp(1.0) - 1.0)) > 1e-14) o.fail("N^{00}_{15}(u) value off");
  return o;
}

Outcome smooth_inputs() {
  Outcome o;
  for (const auto [m, n] : std::vector<GridPoint>{{1, 3}, {2, 5}}) {
    const Element1D e = build_element(m, n);
    for (const auto& u : {SmoothFunction1D::sin(), SmoothFunction1D::exp()}) {
      const double r = smooth_commutation_residual(e, u, 12);
      if (!(r <= 1e-12)) o.fail("residual " + std::to_string(r));
      o.require(two_cell_continuity_demo(e, u, 1e-12));
    }
  }
  return o;
}

Outcome negative_controls() {
  Outcome o;
  enum Target { unisolvence_check, lemma_check, dd_check };
  struct Control {
    std::string name;
    Target target;
  };
  const std::vector<Control> controls{
      {"swapped-basis", unisolvence_check}, {"wrong-functional-order", lemma_check}, {"flipped-theta", dd_check}};
  for (const auto [m, n] : std::vector<GridPoint>{{1, 3}, {1, 4}, {2, 5}}) {
    const Element1D good = build_element(m, n);
    for (const auto& c : controls) {
      Element1D e = good;
      ThetaSign sign = ThetaSign::standard;
      if (c.name == "swapped-basis") e = fixtures::swapped_basis_rows(good);
      if (c.name == "wrong-functional-order") e = fixtures::wrong_functional_order(good);
      if (c.name == "flipped-theta") sign = ThetaSign::flipped;
      const VerificationReport reports[] = {verify_unisolvence(e), verify_lemma_hypotheses(e, n + 5),
                                            verify_dd_zero(2, e, sign)};
      for (int t = 0; t < 3; ++t) {
        const bool targeted = t == c.target;
        const auto& r = reports[t];
        if (targeted && (r.pass || r.witness.empty())) o.fail(c.name + " did not trip " + r.property);
        if (!targeted && !r.pass) o.fail(c.name + " also tripped " + r.property);
      }
    }
  }
  return o;
}

}  // namespace

int main() {
  criterion(1, "unisolvence grid m=0..4, n=2m+1..2m+6", 30, unisolvence);
  criterion(2, "lemma hypotheses, monomial probes to degree n+5", 30, lemma_hypotheses);
  criterion(3, "d I0 u = I1 du exactly on monomial and random probes", 60, commutation);
  criterion(4, "I0 reproduces P_n, I1 reproduces P_{n-1}", 0, projection);
  criterion(5, "Legendre integral identity, orthogonality, l_j(1)=1, band/parity of L^m_j", 0, legendre_identities);
  criterion(6, "d d = 0 on tensor basis, N=2,3, m=0..2, n=2m+1..2m+3", 120, dd_zero);
  criterion(7, "tensor interpolation commutes with d, N=2,3, all nu, degree <= n+3", 120, tensor_commutation);
  criterion(8, "n=5, m=2 tensor functional descriptors and smooth N^{00}_{15}", 0, example_descriptors);
  criterion(9, "sin/exp commutation residual and two-cell continuity <= 1e-12", 0, smooth_inputs);
  criterion(10, "negative controls trip exactly their targeted verifier", 0, negative_controls);
  std::printf("%s: %d of 10 criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
