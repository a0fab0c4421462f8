#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fecc/element.hpp"
#include "fecc/functional.hpp"
#include "fecc/matrix.hpp"
#include "fecc/smooth.hpp"

namespace fecc {

/// 0/1 vector over the N tensor factors; bit l set means factor l carries a
/// 1-form. The weight is the total form degree.
struct CharacteristicVector {
  std::vector<int> bits;

  std::size_t size() const noexcept { return bits.size(); }
  int weight() const noexcept;
  FormDegree degree(std::size_t axis) const { return form_degree_from_int(bits[axis]); }
  /// Bits as a string, e.g. "01".
  std::string to_string() const;

  friend auto operator<=>(const CharacteristicVector&, const CharacteristicVector&) = default;
  friend bool operator==(const CharacteristicVector&, const CharacteristicVector&) = default;
};

/// All C(N, nu) vectors of weight nu, lexicographic. Throws InvalidParameter
/// unless N >= 1 and 0 <= nu <= N.
std::vector<CharacteristicVector> enumerate_chi(int N, int nu);

/// Dense row-major array with a runtime shape.
template <typename T>
class DenseTensor {
 public:
  DenseTensor() = default;
  explicit DenseTensor(std::vector<std::size_t> shape) : shape_(std::move(shape)), data_(count(shape_), T(0)) {}

  const std::vector<std::size_t>& shape() const noexcept { return shape_; }
  std::size_t rank() const noexcept { return shape_.size(); }
  std::size_t size() const noexcept { return data_.size(); }

  T& operator[](std::size_t flat) { return data_[flat]; }
  const T& operator[](std::size_t flat) const { return data_[flat]; }
  T& at(std::span<const std::size_t> index) { return data_[flat_index(index)]; }
  const T& at(std::span<const std::size_t> index) const { return data_[flat_index(index)]; }

  std::size_t flat_index(std::span<const std::size_t> index) const {
    std::size_t flat = 0;
    for (std::size_t a = 0; a < shape_.size(); ++a) flat = flat * shape_[a] + index[a];
    return flat;
  }
  std::vector<std::size_t> multi_index(std::size_t flat) const {
    std::vector<std::size_t> index(shape_.size());
    for (std::size_t a = shape_.size(); a-- > 0;) {
      index[a] = flat % shape_[a];
      flat /= shape_[a];
    }
    return index;
  }

  bool is_zero() const {
    for (const auto& v : data_)
      if (v != T(0)) return false;
    return true;
  }

  /// Outer product v_1 (x) ... (x) v_N.
  static DenseTensor outer(const std::vector<std::vector<T>>& factors) {
    std::vector<std::size_t> shape;
    for (const auto& f : factors) shape.push_back(f.size());
    DenseTensor out(shape);
    for (std::size_t flat = 0; flat < out.size(); ++flat) {
      const auto index = out.multi_index(flat);
      T v(1);
      for (std::size_t a = 0; a < factors.size(); ++a) v *= factors[a][index[a]];
      out.data_[flat] = v;
    }
    return out;
  }

  /// Contracts `axis` with the columns of `a`: out[.., r, ..] = sum_k a(r, k) t[.., k, ..].
  DenseTensor mode_product(const Matrix<T>& a, std::size_t axis) const {
    std::vector<std::size_t> shape = shape_;
    shape[axis] = a.rows();
    DenseTensor out(shape);
    std::size_t inner = 1;
    for (std::size_t b = axis + 1; b < shape_.size(); ++b) inner *= shape_[b];
    const std::size_t outer_count = data_.size() / (shape_[axis] * inner);
    for (std::size_t o = 0; o < outer_count; ++o)
      for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t k = 0; k < shape_[axis]; ++k) {
          const T& w = a(r, k);
          if (w == T(0)) continue;
          const std::size_t src = (o * shape_[axis] + k) * inner;
          const std::size_t dst = (o * a.rows() + r) * inner;
          for (std::size_t i = 0; i < inner; ++i) out.data_[dst + i] += w * data_[src + i];
        }
    return out;
  }

  /// this += scale * other; grows the shape to the elementwise maximum.
  void accumulate(const DenseTensor& other, const T& scale) {
    if (shape_.empty() && data_.empty()) *this = DenseTensor(other.shape_);
    if (other.shape_ != shape_) {
      std::vector<std::size_t> shape = shape_;
      for (std::size_t a = 0; a < shape.size(); ++a) shape[a] = std::max(shape[a], other.shape_[a]);
      if (shape != shape_) {
        DenseTensor grown(shape);
        for (std::size_t flat = 0; flat < data_.size(); ++flat) grown.at(multi_index(flat)) = data_[flat];
        *this = std::move(grown);
      }
      for (std::size_t flat = 0; flat < other.size(); ++flat)
        if (other.data_[flat] != T(0)) at(other.multi_index(flat)) += scale * other.data_[flat];
      return;
    }
    for (std::size_t flat = 0; flat < data_.size(); ++flat)
      if (other.data_[flat] != T(0)) data_[flat] += scale * other.data_[flat];
  }

  friend bool operator==(const DenseTensor&, const DenseTensor&) = default;

 private:
  static std::size_t count(const std::vector<std::size_t>& shape) {
    std::size_t c = 1;
    for (auto s : shape) c *= s;
    return c;
  }

  std::vector<std::size_t> shape_;
  std::vector<T> data_;
};

/// 1D basis sizes per factor: n+1 for 0-form factors, n for 1-form factors.
std::vector<std::size_t> block_shape(const CharacteristicVector& chi, const Element1D& e);

/// sum over chi in chi_nu of prod_l (n + 1 - i_l).
std::size_t space_dimension(int N, int nu, const Element1D& e);

/// Sign convention of the tensor exterior derivative. `flipped` replaces
/// every -1 by +1 and exists only as a negative control.
enum class ThetaSign { standard, flipped };

/// theta_t = (-1)^(i_1 + ... + i_{t-1}) for 0-based axis t.
int theta(const CharacteristicVector& chi, std::size_t axis, ThetaSign sign = ThetaSign::standard);

/// weight * f_1 (x) ... (x) f_N with polynomial factors of stated form degree.
struct RankOneForm {
  Rational weight{1};
  std::vector<std::pair<FormDegree, Polynomial>> factors;

  CharacteristicVector chi() const;
  int dimension() const noexcept { return static_cast<int>(factors.size()); }
  int degree() const noexcept { return chi().weight(); }
};

/// Polynomial nu-form on [0,1]^N: per chi block the tensor of monomial
/// coefficients, axis l indexing the power of x_l. Blocks may be absent
/// (zero) and shapes may carry trailing zeros, so compare with is_zero().
struct PolynomialForm {
  int dimension = 0;
  int degree = 0;
  std::map<CharacteristicVector, DenseTensor<Rational>> blocks;

  bool is_zero() const;
  /// this += scale * other.
  void accumulate(const PolynomialForm& other, const Rational& scale = Rational(1));
};

/// Element of the tensor-product finite element space: per chi block the
/// coefficients in the rank-one basis, row-major over (j_1, ..., j_N). Every
/// chi of the degree has a block.
template <typename T>
struct BasicTensorForm {
  int dimension = 0;
  int degree = 0;
  std::map<CharacteristicVector, DenseTensor<T>> blocks;

  bool is_zero() const {
    for (const auto& [chi, block] : blocks)
      if (!block.is_zero()) return false;
    return true;
  }
};

using TensorForm = BasicTensorForm<Rational>;
using RealTensorForm = BasicTensorForm<double>;

/// Zero form with every block of chi_nu allocated. For nu = N + 1 the form
/// has no blocks.
TensorForm zero_tensor_form(int N, int nu, const Element1D& e);

/// Smooth nu-form on [0,1]^N as one scalar function per chi component.
/// Missing components are zero.
struct SmoothForm {
  int dimension = 0;
  int degree = 0;
  std::map<CharacteristicVector, SmoothFunctionND> components;

  /// 0-form wrapping a scalar function.
  static SmoothForm scalar(SmoothFunctionND u);
};

/// The rank-one basis element phi^{chi}_{j} (j 0-based per factor).
RankOneForm basis_element(const CharacteristicVector& chi, std::span<const std::size_t> j, const Element1D& e);

/// All rank-one basis elements of degree nu: chi lexicographic, then j row-major.
std::vector<RankOneForm> tensor_basis(int N, int nu, const Element1D& e);

PolynomialForm to_polynomial_form(const RankOneForm& u);
/// Expands finite element coefficients into monomials.
PolynomialForm to_polynomial_form(const TensorForm& u, const Element1D& e);

/// Exterior derivative of a rank-one form as a list of rank-one terms,
/// sum_t theta_t f_1 (x) ... (x) d f_t (x) ... over 0-form factors t.
std::vector<RankOneForm> exterior_derivative(const RankOneForm& u, ThetaSign sign = ThetaSign::standard);
PolynomialForm exterior_derivative(const PolynomialForm& u, ThetaSign sign = ThetaSign::standard);

/// Coefficients of d phi^0_j in the 1-form basis, an n x (n+1) matrix.
RationalMatrix derivative_matrix(const Element1D& e);
/// Exterior derivative on finite element coefficients; `d1` from derivative_matrix.
TensorForm exterior_derivative(const TensorForm& u, const RationalMatrix& d1, ThetaSign sign = ThetaSign::standard);
TensorForm exterior_derivative(const TensorForm& u, const Element1D& e, ThetaSign sign = ThetaSign::standard);
RealTensorForm exterior_derivative(const RealTensorForm& u, const RealMatrix& d1, ThetaSign sign = ThetaSign::standard);
/// Exterior derivative of a smooth form through its partial-derivative callbacks.
SmoothForm exterior_derivative(const SmoothForm& u, ThetaSign sign = ThetaSign::standard);

/// N^{chi}_{j}: product of the 1D functionals parts[l] (1-based index
/// indices[l] within the family of degree chi.bits[l]).
struct TensorNodeFunctional {
  CharacteristicVector chi;
  std::vector<NodeFunctional> parts;
  std::vector<int> indices;
};

/// All tensor functionals of degree nu, in basis order.
std::vector<TensorNodeFunctional> tensor_functionals(int N, int nu, const Element1D& e);

/// Exact values. Zero when the characteristic vectors differ.
Rational apply_tensor_functional(const TensorNodeFunctional& f, const RankOneForm& u);
Rational apply_tensor_functional(const TensorNodeFunctional& f, const PolynomialForm& u);
Rational apply_tensor_functional(const TensorNodeFunctional& f, const TensorForm& u, const Element1D& e);
/// Floating value on a smooth form; moments use a tensorized Gauss rule.
/// Throws MissingDerivative when a mixed derivative is unavailable.
double apply_tensor_functional(const TensorNodeFunctional& f, const SmoothForm& u, int quadrature_order);

/// I_{i_1}(u_1) (x) ... (x) I_{i_N}(u_N), scaled by the weight.
TensorForm tensor_interpolate(const RankOneForm& u, const Element1D& e);
/// sum over chi of I_{i_1} (x) ... (x) I_{i_N} applied to a general polynomial form.
/// Throws InvalidParameter when u is not an (N, nu) form.
TensorForm tensor_interpolate(int N, int nu, const PolynomialForm& u, const Element1D& e);
RealTensorForm tensor_interpolate(int N, int nu, const SmoothForm& u, const Element1D& e, int quadrature_order);

/// Node matrix of one chi block by direct evaluation of every tensor
/// functional on every rank-one basis element (row-major numbering).
RationalMatrix tensor_node_matrix(const CharacteristicVector& chi, const Element1D& e);
/// M_{i_1} (x) ... (x) M_{i_N}.
RationalMatrix kronecker_node_matrix(const CharacteristicVector& chi, const Element1D& e);

/// Descriptor on a rank-one argument u (x) v (x) w, e.g.
/// "\partial_x u(0)\partial^2_y v(1)"; sums are parenthesized.
std::string describe(const TensorNodeFunctional& f);
/// Descriptor on a smooth N-variate function, e.g.
/// "\partial_x u(0,1) - \partial_x u(0,0)".
std::string describe_smooth(const TensorNodeFunctional& f);

}  // namespace fecc
