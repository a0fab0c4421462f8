#pragma once

#include <vector>

namespace fecc {

/// Gauss-Legendre rule mapped to [0,1]; points ascending.
struct QuadratureRule {
  std::vector<double> points;
  std::vector<double> weights;

  int order() const noexcept { return static_cast<int>(points.size()); }
};

/// `order`-point Gauss-Legendre rule on [0,1], exact for polynomials of
/// degree <= 2*order-1. Nodes are found by Newton iteration on the
/// Legendre recurrence.
QuadratureRule gauss_legendre(int order);

}  // namespace fecc
