#include "fecc/tensor_verify.hpp"

#include <cmath>
#include <set>
#include <sstream>
#include <type_traits>

#include "fecc/errors.hpp"

namespace fecc {

namespace {

std::vector<std::pair<std::string, long>> params(int N, const Element1D& e) {
  return {{"N", N}, {"m", e.m}, {"n", e.n}};
}

long binomial(int n, int k) {
  long c = 1;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

/// Block position (1-based) of chi within chi_nu.
long block_number(const CharacteristicVector& chi) {
  long pos = 1;
  for (const auto& other : enumerate_chi(static_cast<int>(chi.size()), chi.weight())) {
    if (other == chi) return pos;
    ++pos;
  }
  return 0;
}

/// Index of the first nonzero entry as 1-based (block, j_1, ..., j_N), or empty.
template <typename Form>
std::vector<long> first_nonzero(const Form& f, std::string& value) {
  for (const auto& [chi, block] : f.blocks)
    for (std::size_t flat = 0; flat < block.size(); ++flat)
      if (block[flat] != std::decay_t<decltype(block[flat])>(0)) {
        std::vector<long> where{block_number(chi)};
        for (auto j : block.multi_index(flat)) where.push_back(static_cast<long>(j) + 1);
        std::ostringstream os;
        os.precision(17);
        os << chi.to_string() << ": " << block[flat];
        value = os.str();
        return where;
      }
  return {};
}

}  // namespace

std::vector<RankOneForm> tensor_monomial_probes(int N, int nu, int max_degree) {
  std::vector<RankOneForm> probes;
  for (const auto& chi : enumerate_chi(N, nu)) {
    const DenseTensor<int> powers(std::vector<std::size_t>(static_cast<std::size_t>(N),
                                                          static_cast<std::size_t>(max_degree + 1)));
    for (std::size_t flat = 0; flat < powers.size(); ++flat) {
      const auto a = powers.multi_index(flat);
      RankOneForm u;
      for (int l = 0; l < N; ++l)
        u.factors.emplace_back(chi.degree(static_cast<std::size_t>(l)),
                               Polynomial::monomial(static_cast<int>(a[static_cast<std::size_t>(l)])));
      probes.push_back(std::move(u));
    }
  }
  return probes;
}

VerificationReport verify_tensor_commutation(int N, int nu, const std::vector<RankOneForm>& probes,
                                             const Element1D& e, ThetaSign sign) {
  VerificationReport report("tensor-commutation", params(N, e));
  report.parameters.emplace_back("nu", nu);
  report.parameters.emplace_back("probes", static_cast<long>(probes.size()));
  const RationalMatrix d1 = derivative_matrix(e);

  for (std::size_t p = 0; p < probes.size(); ++p) {
    const RankOneForm& u = probes[p];
    if (u.dimension() != N || u.degree() != nu) throw InvalidParameter("probe does not match (N, nu)");

    TensorForm residual = exterior_derivative(tensor_interpolate(u, e), d1, sign);
    if (nu < N)
      for (const auto& term : exterior_derivative(u, sign)) {
        const TensorForm t = tensor_interpolate(term, e);
        for (const auto& [chi, block] : t.blocks) residual.blocks.at(chi).accumulate(block, Rational(-1));
      }
    std::string value;
    auto where = first_nonzero(residual, value);
    if (!where.empty()) {
      where.insert(where.begin(), static_cast<long>(p) + 1);
      report.fail({"nonzero-residual", where, value});
    }
  }
  return report;
}

VerificationReport verify_dd_zero(int N, const Element1D& e, ThetaSign sign) {
  VerificationReport report("dd-zero", params(N, e));
  for (int nu = 0; nu + 2 <= N; ++nu) {
    const auto basis = tensor_basis(N, nu, e);
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const PolynomialForm dd = exterior_derivative(exterior_derivative(to_polynomial_form(basis[b]), sign), sign);
      std::string value;
      auto where = first_nonzero(dd, value);
      if (!where.empty()) {
        // Report the basis element (nu, ordinal) and where dd is nonzero (block, monomial powers + 1).
        where.insert(where.begin(), {static_cast<long>(nu), static_cast<long>(b) + 1});
        report.fail({"dd-nonzero", where, value});
      }
    }
  }
  return report;
}

VerificationReport verify_tensor_dimensions(int N, const Element1D& e, std::size_t invert_limit) {
  VerificationReport report("dimensions", params(N, e));
  const RationalMatrix d1 = derivative_matrix(e);
  for (int nu = 0; nu <= N; ++nu) {
    const auto chis = enumerate_chi(N, nu);
    if (static_cast<long>(chis.size()) != binomial(N, nu))
      report.fail({"chi-count", {nu}, std::to_string(chis.size())});
    if (std::set<CharacteristicVector>(chis.begin(), chis.end()).size() != chis.size())
      report.fail({"chi-duplicate", {nu}, "duplicate characteristic vector"});
    for (const auto& chi : chis)
      if (chi.weight() != nu) report.fail({"chi-weight", {nu}, chi.to_string()});

    const std::size_t dim = space_dimension(N, nu, e);
    if (tensor_basis(N, nu, e).size() != dim)
      report.fail({"basis-count", {nu}, std::to_string(tensor_basis(N, nu, e).size())});
    if (tensor_functionals(N, nu, e).size() != dim)
      report.fail({"functional-count", {nu}, std::to_string(tensor_functionals(N, nu, e).size())});

    long block_no = 0;
    for (const auto& chi : chis) {
      ++block_no;
      const RationalMatrix direct = tensor_node_matrix(chi, e);
      if (direct != kronecker_node_matrix(chi, e))
        report.fail({"node-matrix-not-kronecker", {nu, block_no}, chi.to_string()});
      if (direct.rows() <= invert_limit && !inverse(direct))
        report.fail({"node-matrix-singular", {nu, block_no}, chi.to_string()});
    }

    const TensorForm d = exterior_derivative(zero_tensor_form(N, nu, e), d1);
    if (nu < N) {
      const TensorForm target = zero_tensor_form(N, nu + 1, e);
      if (d.degree != nu + 1 || d.blocks.size() != target.blocks.size())
        report.fail({"derivative-degree", {nu}, std::to_string(d.degree)});
      for (const auto& [chi, block] : target.blocks)
        if (!d.blocks.contains(chi) || d.blocks.at(chi).shape() != block.shape())
          report.fail({"derivative-shape", {nu}, chi.to_string()});
    }
  }
  return report;
}

double tensor_smooth_commutation_residual(const SmoothForm& u, const Element1D& e, int quadrature_order) {
  const int N = u.dimension;
  const int nu = u.degree;
  if (nu >= N) return 0.0;
  const RealTensorForm lhs =
      exterior_derivative(tensor_interpolate(N, nu, u, e, quadrature_order), to_real(derivative_matrix(e)));
  const RealTensorForm rhs = tensor_interpolate(N, nu + 1, exterior_derivative(u), e, quadrature_order);
  double worst = 0.0;
  for (const auto& [chi, block] : lhs.blocks) {
    const auto& other = rhs.blocks.at(chi);
    for (std::size_t i = 0; i < block.size(); ++i) worst = std::max(worst, std::abs(block[i] - other[i]));
  }
  return worst;
}

}  // namespace fecc
