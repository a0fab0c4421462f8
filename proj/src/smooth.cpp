#include "fecc/smooth.hpp"

#include <algorithm>
#include <cmath>

#include "fecc/errors.hpp"

namespace fecc {

namespace {

int lowered(int max_order) { return max_order == kUnboundedOrder ? max_order : max_order - 1; }

}  // namespace

SmoothFunction1D::SmoothFunction1D(Callback callback, int max_order, std::optional<Polynomial> exact)
    : callback_(std::move(callback)), max_order_(max_order), exact_(std::move(exact)) {
  if (!callback_) throw InvalidParameter("smooth function needs a callback");
  if (max_order_ < 0) throw InvalidParameter("smooth function must provide at least its value");
  if (exact_) {
    const RealPolynomial p(*exact_);
    double scale = 1.0;
    for (double c : p.coefficients()) scale += std::abs(c);
    for (double x : {0.0, 0.25, 0.5, 0.75, 1.0}) {
      if (std::abs(callback_(0, x) - p(x)) > 1e-9 * scale)
        throw InvalidParameter("smooth callback disagrees with its exact polynomial at x=" + std::to_string(x));
    }
  }
}

SmoothFunction1D SmoothFunction1D::from_polynomial(const Polynomial& p) {
  const RealPolynomial r(p);
  return SmoothFunction1D([r](int order, double x) { return r.derivative(order, x); }, kUnboundedOrder, p);
}

SmoothFunction1D SmoothFunction1D::sin() {
  return SmoothFunction1D([](int order, double x) {
    switch (order % 4) {
      case 0: return std::sin(x);
      case 1: return std::cos(x);
      case 2: return -std::sin(x);
      default: return -std::cos(x);
    }
  });
}

SmoothFunction1D SmoothFunction1D::cos() {
  return SmoothFunction1D([](int order, double x) {
    switch (order % 4) {
      case 0: return std::cos(x);
      case 1: return -std::sin(x);
      case 2: return -std::cos(x);
      default: return std::sin(x);
    }
  });
}

SmoothFunction1D SmoothFunction1D::exp() {
  return SmoothFunction1D([](int, double x) { return std::exp(x); });
}

SmoothFunction1D SmoothFunction1D::named(const std::string& name) {
  if (name == "sin") return sin();
  if (name == "cos") return cos();
  if (name == "exp") return exp();
  return from_polynomial(parse_polynomial(name));
}

double SmoothFunction1D::derivative(int order, double x) const {
  if (order < 0) throw InvalidParameter("negative derivative order");
  if (order > max_order_) throw MissingDerivative(order, max_order_);
  return callback_(order, x);
}

SmoothFunction1D SmoothFunction1D::differentiated() const {
  auto cb = callback_;
  std::optional<Polynomial> exact;
  if (exact_) exact = fecc::differentiate(*exact_);
  if (max_order_ == 0) throw MissingDerivative(1, 0);
  return SmoothFunction1D([cb](int order, double x) { return cb(order + 1, x); }, lowered(max_order_),
                          std::move(exact));
}

SmoothFunction1D SmoothFunction1D::pulled_back(double a, double h) const {
  auto cb = callback_;
  return SmoothFunction1D([cb, a, h](int order, double x) { return std::pow(h, order) * cb(order, a + h * x); },
                          max_order_);
}

SmoothFunctionND::SmoothFunctionND(int dimension, Callback callback, int max_order,
                                   std::optional<std::vector<Polynomial>> factors)
    : dimension_(dimension), callback_(std::move(callback)), max_order_(max_order), factors_(std::move(factors)) {
  if (dimension_ < 1) throw InvalidParameter("dimension must be >= 1");
  if (!callback_) throw InvalidParameter("smooth function needs a callback");
  if (factors_ && static_cast<int>(factors_->size()) != dimension_)
    throw InvalidParameter("factorization length does not match the dimension");
  if (factors_) {
    // Spot-check the callback against the factorization at the cell centre and corner.
    for (double c : {0.5, 1.0}) {
      std::vector<int> orders(static_cast<std::size_t>(dimension_), 0);
      std::vector<double> point(static_cast<std::size_t>(dimension_), c);
      double expected = 1.0;
      double scale = 1.0;
      for (const auto& f : *factors_) {
        const RealPolynomial r(f);
        expected *= r(c);
        double s = 1.0;
        for (double k : r.coefficients()) s += std::abs(k);
        scale *= s;
      }
      if (std::abs(callback_(orders, point) - expected) > 1e-9 * scale)
        throw InvalidParameter("smooth callback disagrees with its rank-one factorization");
    }
  }
}

SmoothFunctionND SmoothFunctionND::product(std::vector<SmoothFunction1D> factors) {
  if (factors.empty()) throw InvalidParameter("product needs at least one factor");
  int max_order = kUnboundedOrder;
  bool all_exact = true;
  std::vector<Polynomial> exact;
  for (const auto& f : factors) {
    max_order = std::min(max_order, f.max_order());
    if (f.exact_polynomial())
      exact.push_back(*f.exact_polynomial());
    else
      all_exact = false;
  }
  const int dim = static_cast<int>(factors.size());
  auto cb = [fs = std::move(factors)](std::span<const int> orders, std::span<const double> x) {
    double v = 1.0;
    for (std::size_t l = 0; l < fs.size(); ++l) v *= fs[l].derivative(orders[l], x[l]);
    return v;
  };
  std::optional<std::vector<Polynomial>> fac;
  if (all_exact) fac = std::move(exact);
  return SmoothFunctionND(dim, std::move(cb), max_order, std::move(fac));
}

SmoothFunctionND SmoothFunctionND::product(const std::vector<Polynomial>& factors) {
  std::vector<SmoothFunction1D> fs;
  fs.reserve(factors.size());
  for (const auto& p : factors) fs.push_back(SmoothFunction1D::from_polynomial(p));
  return product(std::move(fs));
}

SmoothFunctionND SmoothFunctionND::linear_combination(std::vector<std::pair<double, SmoothFunctionND>> terms) {
  if (terms.empty()) throw InvalidParameter("linear combination needs at least one term");
  const int dim = terms.front().second.dimension();
  int max_order = kUnboundedOrder;
  for (const auto& [w, f] : terms) {
    if (f.dimension() != dim) throw InvalidParameter("linear combination of functions of different dimension");
    max_order = std::min(max_order, f.max_order());
  }
  auto cb = [ts = std::move(terms)](std::span<const int> orders, std::span<const double> x) {
    double v = 0.0;
    for (const auto& [w, f] : ts) v += w * f.derivative(orders, x);
    return v;
  };
  return SmoothFunctionND(dim, std::move(cb), max_order);
}

SmoothFunctionND SmoothFunctionND::zero(int dimension) {
  return SmoothFunctionND(dimension, [](std::span<const int>, std::span<const double>) { return 0.0; });
}

double SmoothFunctionND::value(std::span<const double> point) const {
  const std::vector<int> orders(static_cast<std::size_t>(dimension_), 0);
  return derivative(orders, point);
}

double SmoothFunctionND::derivative(std::span<const int> orders, std::span<const double> point) const {
  if (static_cast<int>(orders.size()) != dimension_ || static_cast<int>(point.size()) != dimension_)
    throw InvalidParameter("derivative request does not match the dimension");
  for (int o : orders) {
    if (o < 0) throw InvalidParameter("negative derivative order");
    if (o > max_order_) throw MissingDerivative(o, max_order_);
  }
  return callback_(orders, point);
}

SmoothFunctionND SmoothFunctionND::partial(int axis) const {
  if (axis < 0 || axis >= dimension_) throw InvalidParameter("axis out of range");
  if (max_order_ == 0) throw MissingDerivative(1, 0);
  auto cb = callback_;
  std::optional<std::vector<Polynomial>> fac;
  if (factors_) {
    fac = *factors_;
    (*fac)[static_cast<std::size_t>(axis)] = differentiate((*fac)[static_cast<std::size_t>(axis)]);
  }
  const auto a = static_cast<std::size_t>(axis);
  return SmoothFunctionND(
      dimension_,
      [cb, a](std::span<const int> orders, std::span<const double> x) {
        std::vector<int> shifted(orders.begin(), orders.end());
        ++shifted[a];
        return cb(shifted, x);
      },
      lowered(max_order_), std::move(fac));
}

}  // namespace fecc
