#include "fecc/tensor.hpp"

#include <variant>

#include "fecc/errors.hpp"

namespace fecc {

namespace {

template <typename T>
DenseTensor<T> scaled(DenseTensor<T> t, const T& s) {
  for (std::size_t i = 0; i < t.size(); ++i) t[i] *= s;
  return t;
}

std::vector<std::size_t> shape_for(const CharacteristicVector& chi, int n) {
  std::vector<std::size_t> shape;
  for (int b : chi.bits) shape.push_back(static_cast<std::size_t>(n + 1 - b));
  return shape;
}

template <typename T>
BasicTensorForm<T> zero_form(int N, int nu, int n) {
  BasicTensorForm<T> out;
  out.dimension = N;
  out.degree = nu;
  if (nu > N) return out;
  for (const auto& chi : enumerate_chi(N, nu)) out.blocks.emplace(chi, DenseTensor<T>(shape_for(chi, n)));
  return out;
}

CharacteristicVector with_bit(CharacteristicVector chi, std::size_t axis) {
  chi.bits[axis] = 1;
  return chi;
}

template <typename T>
BasicTensorForm<T> fe_derivative(const BasicTensorForm<T>& u, const Matrix<T>& d1, ThetaSign sign) {
  auto out = zero_form<T>(u.dimension, u.degree + 1, static_cast<int>(d1.rows()));
  if (u.degree >= u.dimension) return out;
  for (const auto& [chi, block] : u.blocks)
    for (std::size_t t = 0; t < chi.size(); ++t) {
      if (chi.bits[t] == 1) continue;
      out.blocks.at(with_bit(chi, t)).accumulate(block.mode_product(d1, t), T(theta(chi, t, sign)));
    }
  return out;
}

/// (s-1) x s matrix of d/dx on monomial coefficients 1, x, ..., x^{s-1}.
RationalMatrix monomial_derivative(std::size_t s) {
  RationalMatrix d(s == 0 ? 0 : s - 1, s);
  for (std::size_t p = 1; p < s; ++p) d(p - 1, p) = Rational(static_cast<long>(p));
  return d;
}

/// F(i, p) = functional_i(x^p) for the family of degree k.
RationalMatrix functional_on_monomials(const Element1D& e, FormDegree k, std::size_t powers) {
  const auto& fs = e.functionals(k);
  RationalMatrix f(fs.size(), powers);
  for (std::size_t i = 0; i < fs.size(); ++i)
    for (std::size_t p = 0; p < powers; ++p)
      f(i, p) = apply_functional(fs[i], Polynomial::monomial(static_cast<int>(p)));
  return f;
}

std::string factor_name(std::size_t axis, std::size_t N) {
  static const char* names[] = {"u", "v", "w"};
  return N <= 3 ? names[axis] : "u_{" + std::to_string(axis + 1) + "}";
}

std::string axis_name(std::size_t axis, std::size_t N) {
  static const char* names[] = {"x", "y", "z"};
  return N <= 3 ? names[axis] : "x_{" + std::to_string(axis + 1) + "}";
}

double smooth_value(const TensorNodeFunctional& f, const SmoothFunctionND& u, const QuadratureRule& rule) {
  const std::size_t N = f.parts.size();
  std::vector<std::vector<EvaluationAtom>> atoms;
  for (const auto& part : f.parts) atoms.push_back(evaluation_atoms(part, rule));
  std::vector<std::size_t> pick(N, 0);
  std::vector<int> orders(N);
  std::vector<double> point(N);
  double acc = 0.0;
  while (true) {
    double w = 1.0;
    for (std::size_t a = 0; a < N; ++a) {
      const auto& atom = atoms[a][pick[a]];
      w *= atom.weight;
      orders[a] = atom.order;
      point[a] = atom.point;
    }
    if (w != 0.0) acc += w * u.derivative(orders, point);
    std::size_t a = N;
    while (a-- > 0) {
      if (++pick[a] < atoms[a].size()) break;
      pick[a] = 0;
    }
    if (a == static_cast<std::size_t>(-1)) break;
  }
  return acc;
}

/// One summand of a factor in the smooth descriptor.
struct SmoothTerm {
  int sign = 1;
  int order = 0;
  std::string coordinate;
  std::string prefix;
  std::string suffix;
};

std::vector<SmoothTerm> smooth_terms(const NodeFunctional& f, const std::string& axis) {
  if (const auto* e = std::get_if<EndpointDerivative>(&f.kind))
    return {{1, e->order + (e->of_derivative ? 1 : 0), std::to_string(e->point), "", ""}};
  if (std::holds_alternative<EndpointSum>(f.kind)) return {{1, 0, "1", "", ""}, {1, 0, "0", "", ""}};
  const auto& mo = std::get<Moment>(f.kind);
  if (mo.of_derivative && mo.legendre_index == 0) return {{1, 0, "1", "", ""}, {-1, 0, "0", "", ""}};
  std::string prefix = "\\int_0^1 ";
  if (mo.legendre_index > 0) prefix += "\\ell_{" + std::to_string(mo.legendre_index) + "}(" + axis + ") ";
  return {{1, mo.of_derivative ? 1 : 0, axis, prefix, "\\,\\dif " + axis}};
}

}  // namespace

int CharacteristicVector::weight() const noexcept {
  int w = 0;
  for (int b : bits) w += b;
  return w;
}

std::string CharacteristicVector::to_string() const {
  std::string s;
  for (int b : bits) s += static_cast<char>('0' + b);
  return s;
}

std::vector<CharacteristicVector> enumerate_chi(int N, int nu) {
  if (N < 1) throw InvalidParameter("tensor dimension must be >= 1");
  if (nu < 0 || nu > N) throw InvalidParameter("form degree must lie in 0..N");
  std::vector<CharacteristicVector> out;
  for (unsigned code = 0; code < (1u << N); ++code) {
    CharacteristicVector chi;
    for (int a = 0; a < N; ++a) chi.bits.push_back(static_cast<int>((code >> (N - 1 - a)) & 1u));
    if (chi.weight() == nu) out.push_back(std::move(chi));
  }
  return out;
}

std::vector<std::size_t> block_shape(const CharacteristicVector& chi, const Element1D& e) {
  return shape_for(chi, e.n);
}

std::size_t space_dimension(int N, int nu, const Element1D& e) {
  std::size_t total = 0;
  for (const auto& chi : enumerate_chi(N, nu)) {
    std::size_t block = 1;
    for (auto s : block_shape(chi, e)) block *= s;
    total += block;
  }
  return total;
}

int theta(const CharacteristicVector& chi, std::size_t axis, ThetaSign sign) {
  if (sign == ThetaSign::flipped) return 1;
  int s = 0;
  for (std::size_t a = 0; a < axis; ++a) s += chi.bits[a];
  return s % 2 == 0 ? 1 : -1;
}

CharacteristicVector RankOneForm::chi() const {
  CharacteristicVector c;
  for (const auto& [k, p] : factors) c.bits.push_back(to_int(k));
  return c;
}

bool PolynomialForm::is_zero() const {
  for (const auto& [chi, block] : blocks)
    if (!block.is_zero()) return false;
  return true;
}

void PolynomialForm::accumulate(const PolynomialForm& other, const Rational& scale) {
  if (dimension == 0) {
    dimension = other.dimension;
    degree = other.degree;
  }
  if (other.dimension != dimension || other.degree != degree)
    throw InvalidParameter("cannot add forms of different dimension or degree");
  for (const auto& [chi, block] : other.blocks) blocks[chi].accumulate(block, scale);
}

TensorForm zero_tensor_form(int N, int nu, const Element1D& e) { return zero_form<Rational>(N, nu, e.n); }

SmoothForm SmoothForm::scalar(SmoothFunctionND u) {
  SmoothForm out;
  out.dimension = u.dimension();
  out.degree = 0;
  out.components.emplace(CharacteristicVector{std::vector<int>(static_cast<std::size_t>(u.dimension()), 0)},
                         std::move(u));
  return out;
}

RankOneForm basis_element(const CharacteristicVector& chi, std::span<const std::size_t> j, const Element1D& e) {
  RankOneForm out;
  for (std::size_t a = 0; a < chi.size(); ++a) {
    const FormDegree k = chi.degree(a);
    out.factors.emplace_back(k, e.basis(k).at(j[a]));
  }
  return out;
}

std::vector<RankOneForm> tensor_basis(int N, int nu, const Element1D& e) {
  std::vector<RankOneForm> out;
  for (const auto& chi : enumerate_chi(N, nu)) {
    const DenseTensor<int> index_space(block_shape(chi, e));
    for (std::size_t flat = 0; flat < index_space.size(); ++flat)
      out.push_back(basis_element(chi, index_space.multi_index(flat), e));
  }
  return out;
}

PolynomialForm to_polynomial_form(const RankOneForm& u) {
  PolynomialForm out;
  out.dimension = u.dimension();
  out.degree = u.degree();
  std::vector<std::vector<Rational>> coeffs;
  for (const auto& [k, p] : u.factors) coeffs.emplace_back(p.coefficients().begin(), p.coefficients().end());
  out.blocks.emplace(u.chi(), scaled(DenseTensor<Rational>::outer(coeffs), u.weight));
  return out;
}

PolynomialForm to_polynomial_form(const TensorForm& u, const Element1D& e) {
  PolynomialForm out;
  out.dimension = u.dimension;
  out.degree = u.degree;
  for (const auto& [chi, block] : u.blocks) {
    // Change of basis per axis: column j holds the monomial coefficients of basis_j.
    DenseTensor<Rational> t = block;
    for (std::size_t a = 0; a < chi.size(); ++a) {
      const auto& basis = e.basis(chi.degree(a));
      RationalMatrix change(static_cast<std::size_t>(e.n + 1), basis.size());
      for (std::size_t j = 0; j < basis.size(); ++j)
        for (int p = 0; p <= basis[j].degree(); ++p) change(static_cast<std::size_t>(p), j) = basis[j].coefficient(p);
      t = t.mode_product(change, a);
    }
    out.blocks.emplace(chi, std::move(t));
  }
  return out;
}

std::vector<RankOneForm> exterior_derivative(const RankOneForm& u, ThetaSign sign) {
  const CharacteristicVector chi = u.chi();
  std::vector<RankOneForm> out;
  for (std::size_t t = 0; t < u.factors.size(); ++t) {
    if (u.factors[t].first == FormDegree::one) continue;
    Polynomial dp = differentiate(u.factors[t].second);
    if (dp.is_zero()) continue;
    RankOneForm term = u;
    term.weight *= Rational(theta(chi, t, sign));
    term.factors[t] = {FormDegree::one, std::move(dp)};
    out.push_back(std::move(term));
  }
  return out;
}

PolynomialForm exterior_derivative(const PolynomialForm& u, ThetaSign sign) {
  PolynomialForm out;
  out.dimension = u.dimension;
  out.degree = u.degree + 1;
  for (const auto& [chi, block] : u.blocks)
    for (std::size_t t = 0; t < chi.size(); ++t) {
      if (chi.bits[t] == 1 || block.shape()[t] <= 1) continue;
      const DenseTensor<Rational> dt = block.mode_product(monomial_derivative(block.shape()[t]), t);
      out.blocks[with_bit(chi, t)].accumulate(dt, Rational(theta(chi, t, sign)));
    }
  return out;
}

RationalMatrix derivative_matrix(const Element1D& e) {
  RationalMatrix d(static_cast<std::size_t>(e.n), static_cast<std::size_t>(e.n + 1));
  for (std::size_t j = 0; j < e.basis0.size(); ++j) {
    const auto c = interpolation_coefficients(e, FormDegree::one, differentiate(e.basis0[j]));
    for (std::size_t i = 0; i < c.size(); ++i) d(i, j) = c[i];
  }
  return d;
}

TensorForm exterior_derivative(const TensorForm& u, const RationalMatrix& d1, ThetaSign sign) {
  return fe_derivative(u, d1, sign);
}

RealTensorForm exterior_derivative(const RealTensorForm& u, const RealMatrix& d1, ThetaSign sign) {
  return fe_derivative(u, d1, sign);
}

TensorForm exterior_derivative(const TensorForm& u, const Element1D& e, ThetaSign sign) {
  return exterior_derivative(u, derivative_matrix(e), sign);
}

SmoothForm exterior_derivative(const SmoothForm& u, ThetaSign sign) {
  SmoothForm out;
  out.dimension = u.dimension;
  out.degree = u.degree + 1;
  std::map<CharacteristicVector, std::vector<std::pair<double, SmoothFunctionND>>> terms;
  for (const auto& [chi, f] : u.components)
    for (std::size_t t = 0; t < chi.size(); ++t)
      if (chi.bits[t] == 0)
        terms[with_bit(chi, t)].emplace_back(static_cast<double>(theta(chi, t, sign)),
                                             f.partial(static_cast<int>(t)));
  for (auto& [chi, list] : terms) out.components.emplace(chi, SmoothFunctionND::linear_combination(std::move(list)));
  return out;
}

std::vector<TensorNodeFunctional> tensor_functionals(int N, int nu, const Element1D& e) {
  std::vector<TensorNodeFunctional> out;
  for (const auto& chi : enumerate_chi(N, nu)) {
    const DenseTensor<int> index_space(block_shape(chi, e));
    for (std::size_t flat = 0; flat < index_space.size(); ++flat) {
      const auto j = index_space.multi_index(flat);
      TensorNodeFunctional f{chi, {}, {}};
      for (std::size_t a = 0; a < chi.size(); ++a) {
        f.parts.push_back(e.functionals(chi.degree(a))[j[a]]);
        f.indices.push_back(static_cast<int>(j[a]) + 1);
      }
      out.push_back(std::move(f));
    }
  }
  return out;
}

Rational apply_tensor_functional(const TensorNodeFunctional& f, const RankOneForm& u) {
  if (u.chi() != f.chi) return Rational(0);
  Rational acc = u.weight;
  for (std::size_t a = 0; a < f.parts.size() && !acc.is_zero(); ++a)
    acc *= apply_functional(f.parts[a], u.factors[a].second);
  return acc;
}

Rational apply_tensor_functional(const TensorNodeFunctional& f, const PolynomialForm& u) {
  const auto it = u.blocks.find(f.chi);
  if (it == u.blocks.end()) return Rational(0);
  const DenseTensor<Rational>& block = it->second;
  std::vector<std::vector<Rational>> values(f.parts.size());
  for (std::size_t a = 0; a < f.parts.size(); ++a)
    for (std::size_t p = 0; p < block.shape()[a]; ++p)
      values[a].push_back(apply_functional(f.parts[a], Polynomial::monomial(static_cast<int>(p))));
  Rational acc(0);
  for (std::size_t flat = 0; flat < block.size(); ++flat) {
    if (block[flat].is_zero()) continue;
    const auto index = block.multi_index(flat);
    Rational term = block[flat];
    for (std::size_t a = 0; a < index.size(); ++a) term *= values[a][index[a]];
    acc += term;
  }
  return acc;
}

Rational apply_tensor_functional(const TensorNodeFunctional& f, const TensorForm& u, const Element1D& e) {
  const auto it = u.blocks.find(f.chi);
  if (it == u.blocks.end()) return Rational(0);
  const DenseTensor<Rational>& block = it->second;
  Rational acc(0);
  for (std::size_t flat = 0; flat < block.size(); ++flat) {
    if (block[flat].is_zero()) continue;
    const auto index = block.multi_index(flat);
    Rational term = block[flat];
    for (std::size_t a = 0; a < index.size(); ++a)
      term *= e.node_matrix(f.chi.degree(a))(static_cast<std::size_t>(f.indices[a] - 1), index[a]);
    acc += term;
  }
  return acc;
}

double apply_tensor_functional(const TensorNodeFunctional& f, const SmoothForm& u, int quadrature_order) {
  const auto it = u.components.find(f.chi);
  if (it == u.components.end()) return 0.0;
  return smooth_value(f, it->second, gauss_legendre(quadrature_order));
}

TensorForm tensor_interpolate(const RankOneForm& u, const Element1D& e) {
  TensorForm out = zero_tensor_form(u.dimension(), u.degree(), e);
  std::vector<std::vector<Rational>> coeffs;
  for (const auto& [k, p] : u.factors) coeffs.push_back(interpolation_coefficients(e, k, p));
  out.blocks.at(u.chi()) = scaled(DenseTensor<Rational>::outer(coeffs), u.weight);
  return out;
}

TensorForm tensor_interpolate(int N, int nu, const PolynomialForm& u, const Element1D& e) {
  if (u.dimension != N || u.degree != nu) throw InvalidParameter("input form does not match (N, nu)");
  TensorForm out = zero_tensor_form(N, nu, e);
  for (const auto& [chi, block] : u.blocks) {
    DenseTensor<Rational> t = block;
    for (std::size_t a = 0; a < chi.size(); ++a) {
      const FormDegree k = chi.degree(a);
      t = t.mode_product(e.alpha(k) * functional_on_monomials(e, k, t.shape()[a]), a);
    }
    out.blocks.at(chi) = std::move(t);
  }
  return out;
}

RealTensorForm tensor_interpolate(int N, int nu, const SmoothForm& u, const Element1D& e, int quadrature_order) {
  if (u.dimension != N || u.degree != nu) throw InvalidParameter("input form does not match (N, nu)");
  RealTensorForm out = zero_form<double>(N, nu, e.n);
  const QuadratureRule rule = gauss_legendre(quadrature_order);
  const auto functionals = tensor_functionals(N, nu, e);
  std::size_t next = 0;
  for (auto& [chi, block] : out.blocks) {
    const auto it = u.components.find(chi);
    if (it == u.components.end()) {
      next += block.size();
      continue;
    }
    DenseTensor<double> values(block.shape());
    for (std::size_t flat = 0; flat < values.size(); ++flat)
      values[flat] = smooth_value(functionals[next++], it->second, rule);
    for (std::size_t a = 0; a < chi.size(); ++a) values = values.mode_product(to_real(e.alpha(chi.degree(a))), a);
    block = std::move(values);
  }
  return out;
}

RationalMatrix tensor_node_matrix(const CharacteristicVector& chi, const Element1D& e) {
  const DenseTensor<int> index_space(block_shape(chi, e));
  std::vector<RankOneForm> basis;
  std::vector<TensorNodeFunctional> functionals;
  for (std::size_t flat = 0; flat < index_space.size(); ++flat) {
    const auto j = index_space.multi_index(flat);
    basis.push_back(basis_element(chi, j, e));
    TensorNodeFunctional f{chi, {}, {}};
    for (std::size_t a = 0; a < chi.size(); ++a) {
      f.parts.push_back(e.functionals(chi.degree(a))[j[a]]);
      f.indices.push_back(static_cast<int>(j[a]) + 1);
    }
    functionals.push_back(std::move(f));
  }
  RationalMatrix out(functionals.size(), basis.size());
  for (std::size_t i = 0; i < functionals.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) out(i, j) = apply_tensor_functional(functionals[i], basis[j]);
  return out;
}

RationalMatrix kronecker_node_matrix(const CharacteristicVector& chi, const Element1D& e) {
  RationalMatrix out = RationalMatrix::identity(1);
  for (std::size_t a = 0; a < chi.size(); ++a) out = kronecker(out, e.node_matrix(chi.degree(a)));
  return out;
}

std::string describe(const TensorNodeFunctional& f) {
  std::string out;
  const std::size_t N = f.parts.size();
  for (std::size_t a = 0; a < N; ++a) {
    const std::string d = describe(f.parts[a], factor_name(a, N), axis_name(a, N));
    out += describes_as_sum(f.parts[a]) ? "(" + d + ")" : d;
  }
  return out;
}

std::string describe_smooth(const TensorNodeFunctional& f) {
  const std::size_t N = f.parts.size();
  std::vector<std::vector<SmoothTerm>> factors;
  for (std::size_t a = 0; a < N; ++a) factors.push_back(smooth_terms(f.parts[a], axis_name(a, N)));

  std::string out;
  std::vector<std::size_t> pick(N, 0);
  bool first = true;
  while (true) {
    int sign = 1;
    std::string prefix, derivative, coords, suffix;
    for (std::size_t a = 0; a < N; ++a) {
      const SmoothTerm& t = factors[a][pick[a]];
      sign *= t.sign;
      prefix += t.prefix;
      suffix += t.suffix;
      if (t.order == 1) derivative += "\\partial_" + axis_name(a, N);
      if (t.order > 1) derivative += "\\partial^" + std::to_string(t.order) + "_" + axis_name(a, N);
      coords += (a == 0 ? "" : ",") + t.coordinate;
    }
    if (!derivative.empty()) derivative += " ";
    if (first)
      out += sign < 0 ? "-" : "";
    else
      out += sign < 0 ? " - " : " + ";
    out += prefix + derivative + "u(" + coords + ")" + suffix;
    first = false;

    std::size_t a = N;
    while (a-- > 0) {
      if (++pick[a] < factors[a].size()) break;
      pick[a] = 0;
    }
    if (a == static_cast<std::size_t>(-1)) break;
  }
  return out;
}

}  // namespace fecc
