#include "fecc/fixtures.hpp"

#include "fecc/errors.hpp"

namespace fecc::fixtures {

Element1D swapped_basis_rows(const Element1D& e) {
  if (e.M0.rows() < 2) throw InvalidParameter("swapped-basis fixture needs at least two rows");
  Element1D bad = e;
  bad.M0.swap_rows(0, 1);
  return bad;
}

Element1D wrong_functional_order(const Element1D& e) {
  if (e.m < 1) throw InvalidParameter("wrong-functional-order fixture needs m >= 1");
  Element1D bad = e;
  bad.functionals1[0] = NodeFunctional{EndpointDerivative{0, 1, false}, FormDegree::one};
  return bad;
}

Element1D permuted_alpha1_rows(const Element1D& e) {
  if (e.alpha1.rows() < 2) throw InvalidParameter("permuted-alpha fixture needs n >= 2");
  Element1D bad = e;
  bad.alpha1.swap_rows(0, 1);
  return bad;
}

const std::vector<std::string>& names() {
  static const std::vector<std::string> all{"swapped-basis", "wrong-functional-order", "permuted-alpha",
                                            "flipped-theta"};
  return all;
}

}  // namespace fecc::fixtures
