#include "fecc/functional.hpp"

#include "fecc/errors.hpp"
#include "fecc/families.hpp"

namespace fecc {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::string derivative_prefix(int order, const std::string& axis) {
  if (order == 0) return "";
  if (order == 1) return "\\partial_" + axis + " ";
  return "\\partial^" + std::to_string(order) + "_" + axis + " ";
}

}  // namespace

FormDegree form_degree_from_int(int k) {
  if (k == 0) return FormDegree::zero;
  if (k == 1) return FormDegree::one;
  throw InvalidParameter("form degree must be 0 or 1, got " + std::to_string(k));
}

int derivative_order(const NodeFunctional& f) {
  return std::visit(Overloaded{[](const EndpointDerivative& e) { return e.order + (e.of_derivative ? 1 : 0); },
                               [](const Moment& mo) { return mo.of_derivative ? 1 : 0; },
                               [](const EndpointSum&) { return 0; }},
                    f.kind);
}

std::string validate(const NodeFunctional& f, int m) {
  const bool zero_form = f.form_degree == FormDegree::zero;
  return std::visit(
      Overloaded{[&](const EndpointDerivative& e) -> std::string {
                   if (e.point != 0 && e.point != 1) return "endpoint must be 0 or 1";
                   if (e.of_derivative) return "endpoint derivative functionals act on the function itself";
                   if (zero_form && (e.order < 1 || e.order > m)) return "0-form endpoint order must lie in 1..m";
                   if (!zero_form && (e.order < 0 || e.order > m - 1))
                     return "1-form endpoint order must lie in 0..m-1";
                   return {};
                 },
                 [&](const Moment& mo) -> std::string {
                   if (mo.legendre_index < 0) return "negative legendre index";
                   if (zero_form && !mo.of_derivative) return "0-form moments act on the derivative";
                   if (!zero_form && mo.of_derivative) return "1-form moments act on the form itself";
                   return {};
                 },
                 [&](const EndpointSum&) -> std::string {
                   if (!zero_form) return "endpoint sum is a 0-form functional";
                   return {};
                 }},
      f.kind);
}

Rational apply_functional(const NodeFunctional& f, const Polynomial& u) {
  return std::visit(Overloaded{[&](const EndpointDerivative& e) {
                                 return evaluate_derivative(u, e.order + (e.of_derivative ? 1 : 0), Rational(e.point));
                               },
                               [&](const Moment& mo) {
                                 const Polynomial arg = mo.of_derivative ? differentiate(u) : u;
                                 return definite_integral(legendre(mo.legendre_index) * arg);
                               },
                               [&](const EndpointSum&) { return evaluate(u, Rational(1)) + evaluate(u, Rational(0)); }},
                    f.kind);
}

std::vector<EvaluationAtom> evaluation_atoms(const NodeFunctional& f, const QuadratureRule& rule) {
  return std::visit(
      Overloaded{[](const EndpointDerivative& e) {
                   return std::vector<EvaluationAtom>{
                       {1.0, e.order + (e.of_derivative ? 1 : 0), static_cast<double>(e.point)}};
                 },
                 [&](const Moment& mo) {
                   const RealPolynomial weight(legendre(mo.legendre_index));
                   std::vector<EvaluationAtom> atoms;
                   atoms.reserve(rule.points.size());
                   for (std::size_t q = 0; q < rule.points.size(); ++q)
                     atoms.push_back({rule.weights[q] * weight(rule.points[q]), mo.of_derivative ? 1 : 0,
                                      rule.points[q]});
                   return atoms;
                 },
                 [](const EndpointSum&) { return std::vector<EvaluationAtom>{{1.0, 0, 1.0}, {1.0, 0, 0.0}}; }},
      f.kind);
}

double apply_functional_smooth(const NodeFunctional& f, const SmoothFunction1D& u, int quadrature_order) {
  const QuadratureRule rule = gauss_legendre(quadrature_order);
  double acc = 0.0;
  for (const auto& atom : evaluation_atoms(f, rule)) acc += atom.weight * u.derivative(atom.order, atom.point);
  return acc;
}

std::string describe(const NodeFunctional& f, const std::string& name, const std::string& axis) {
  return std::visit(
      Overloaded{[&](const EndpointDerivative& e) {
                   return derivative_prefix(e.order + (e.of_derivative ? 1 : 0), axis) + name + "(" +
                          std::to_string(e.point) + ")";
                 },
                 [&](const Moment& mo) {
                   if (mo.of_derivative && mo.legendre_index == 0) return name + "(1)-" + name + "(0)";
                   std::string weight =
                       mo.legendre_index == 0 ? "" : "\\ell_{" + std::to_string(mo.legendre_index) + "} ";
                   return "\\int_0^1 " + weight + derivative_prefix(mo.of_derivative ? 1 : 0, axis) + name +
                          "\\,\\dif x";
                 },
                 [&](const EndpointSum&) { return name + "(1)+" + name + "(0)"; }},
      f.kind);
}

bool describes_as_sum(const NodeFunctional& f) {
  if (std::holds_alternative<EndpointSum>(f.kind)) return true;
  if (const auto* mo = std::get_if<Moment>(&f.kind)) return mo->of_derivative && mo->legendre_index == 0;
  return false;
}

std::string tag(const NodeFunctional& f) {
  return std::visit(Overloaded{[](const EndpointDerivative&) { return std::string("endpoint_derivative"); },
                               [](const Moment&) { return std::string("moment"); },
                               [](const EndpointSum&) { return std::string("endpoint_sum"); }},
                    f.kind);
}

}  // namespace fecc
