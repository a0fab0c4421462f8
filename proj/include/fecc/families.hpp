#pragma once

#include <vector>

#include "fecc/polynomial.hpp"

namespace fecc {

/// Which end of the reference interval a Hermite basis function is attached to.
enum class Endpoint : int { left = 0, right = 1 };

/// Shifted Legendre polynomial of degree j on [0,1], L2-orthogonal with
/// respect to Lebesgue measure and normalized so that its value at 1 is 1.
/// Built with the shifted three-term recurrence.
Polynomial legendre(int j);

/// alpha-fold antiderivative (from 0) of legendre(j); degree j + alpha.
Polynomial iterated_legendre_integral(int alpha, int j);

/// Coefficients c_i with p = sum_i c_i legendre(i), i = 0..deg p.
/// Uses c_i = (2i+1) * integral(p * legendre(i)).
std::vector<Rational> legendre_expansion(const Polynomial& p);

/// Inverse of legendre_expansion.
Polynomial from_legendre_expansion(const std::vector<Rational>& coefficients);

/// Two-point Hermite basis function of degree 2m+1 attached to `side`:
/// its derivative of order beta is 1 at that end, every other derivative of
/// order 0..m vanishes at both ends. Post-conditions are checked and a
/// std::logic_error is thrown if they ever fail.
Polynomial hermite_basis(int m, Endpoint side, int beta);

}  // namespace fecc
