#pragma once

#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fecc/polynomial.hpp"

namespace fecc {

inline constexpr int kUnboundedOrder = std::numeric_limits<int>::max();

/// Smooth scalar function of one variable given through derivative
/// callbacks. `derivative(0, x)` is the value.
class SmoothFunction1D {
 public:
  using Callback = std::function<double(int order, double x)>;

  /// `max_order` bounds the derivative orders the callback can deliver.
  /// When `exact` is given the callback is spot-checked against it and
  /// InvalidParameter is thrown on disagreement.
  explicit SmoothFunction1D(Callback callback, int max_order = kUnboundedOrder,
                            std::optional<Polynomial> exact = std::nullopt);

  static SmoothFunction1D from_polynomial(const Polynomial& p);
  static SmoothFunction1D sin();
  static SmoothFunction1D cos();
  static SmoothFunction1D exp();
  /// sin, cos, exp or a polynomial literal; throws ParseError otherwise.
  static SmoothFunction1D named(const std::string& name);

  double value(double x) const { return derivative(0, x); }
  /// Throws MissingDerivative when order exceeds max_order().
  double derivative(int order, double x) const;

  int max_order() const noexcept { return max_order_; }
  const std::optional<Polynomial>& exact_polynomial() const noexcept { return exact_; }

  /// u' as a new smooth function (the 1-form du under the vector proxy).
  SmoothFunction1D differentiated() const;
  /// x -> u(a + h x) with derivatives scaled by h^order.
  SmoothFunction1D pulled_back(double a, double h) const;

 private:
  Callback callback_;
  int max_order_;
  std::optional<Polynomial> exact_;
};

/// Smooth scalar function on [0,1]^N given through mixed partial derivative
/// callbacks; orders[l] is the derivative order along axis l.
class SmoothFunctionND {
 public:
  using Callback = std::function<double(std::span<const int> orders, std::span<const double> point)>;

  SmoothFunctionND(int dimension, Callback callback, int max_order = kUnboundedOrder,
                   std::optional<std::vector<Polynomial>> factors = std::nullopt);

  /// Rank-one product u_1(x_1) * ... * u_N(x_N).
  static SmoothFunctionND product(std::vector<SmoothFunction1D> factors);
  /// Rank-one product of polynomials; keeps the factorization.
  static SmoothFunctionND product(const std::vector<Polynomial>& factors);
  /// sum_k weight_k * f_k; all terms must share the dimension.
  static SmoothFunctionND linear_combination(std::vector<std::pair<double, SmoothFunctionND>> terms);
  static SmoothFunctionND zero(int dimension);

  int dimension() const noexcept { return dimension_; }
  int max_order() const noexcept { return max_order_; }
  const std::optional<std::vector<Polynomial>>& factors() const noexcept { return factors_; }

  double value(std::span<const double> point) const;
  /// Throws MissingDerivative when any order exceeds max_order().
  double derivative(std::span<const int> orders, std::span<const double> point) const;
  /// Partial derivative along `axis` as a new function.
  SmoothFunctionND partial(int axis) const;

 private:
  int dimension_;
  Callback callback_;
  int max_order_;
  std::optional<std::vector<Polynomial>> factors_;
};

}  // namespace fecc
