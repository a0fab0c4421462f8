#pragma once

#include <string>
#include <variant>
#include <vector>

#include "fecc/polynomial.hpp"
#include "fecc/quadrature.hpp"
#include "fecc/smooth.hpp"

namespace fecc {

/// Degree of a univariate differential form under the vector proxy:
/// 0-forms are functions, 1-forms carry a dx.
enum class FormDegree : int { zero = 0, one = 1 };

inline int to_int(FormDegree k) { return static_cast<int>(k); }
FormDegree form_degree_from_int(int k);

/// Derivative of the given order taken at x = point (0 or 1). With
/// of_derivative set the functional acts on u' instead of u.
struct EndpointDerivative {
  int point = 0;
  int order = 0;
  bool of_derivative = false;
  friend bool operator==(const EndpointDerivative&, const EndpointDerivative&) = default;
};

/// Integral over [0,1] of legendre(legendre_index) times u (or u').
struct Moment {
  int legendre_index = 0;
  bool of_derivative = false;
  friend bool operator==(const Moment&, const Moment&) = default;
};

/// u(1) + u(0).
struct EndpointSum {
  friend bool operator==(const EndpointSum&, const EndpointSum&) = default;
};

struct NodeFunctional {
  std::variant<EndpointDerivative, Moment, EndpointSum> kind;
  FormDegree form_degree = FormDegree::zero;

  friend bool operator==(const NodeFunctional&, const NodeFunctional&) = default;
};

/// Total order of differentiation applied to the argument before the
/// functional evaluates (endpoint order, plus one for of_derivative).
int derivative_order(const NodeFunctional& f);

/// Checks the family constraints for continuity order m. Returns an empty
/// string when valid, otherwise a description of the violation.
std::string validate(const NodeFunctional& f, int m);

/// Exact value on a polynomial.
Rational apply_functional(const NodeFunctional& f, const Polynomial& u);

/// One term of a functional acting on smooth input:
/// weight * (d/dx)^order u(point).
struct EvaluationAtom {
  double weight;
  int order;
  double point;
};

/// Expands a functional into point evaluations; moments use `rule`.
std::vector<EvaluationAtom> evaluation_atoms(const NodeFunctional& f, const QuadratureRule& rule);

/// Floating value on a smooth function; moments use Gauss-Legendre with
/// `quadrature_order` points. Throws MissingDerivative when u lacks the
/// derivative the functional needs.
double apply_functional_smooth(const NodeFunctional& f, const SmoothFunction1D& u, int quadrature_order);

/// LaTeX-style descriptor of the functional acting on the univariate
/// function `name` with derivative subscript `axis`, e.g.
/// "\partial_y v(0)", "v(1)-v(0)", "\int_0^1 v\,\dif x".
std::string describe(const NodeFunctional& f, const std::string& name = "u", const std::string& axis = "x");

/// True when the descriptor is a signed sum that needs parentheses inside a product.
bool describes_as_sum(const NodeFunctional& f);

/// Stable machine tag used in JSON exports.
std::string tag(const NodeFunctional& f);

}  // namespace fecc
