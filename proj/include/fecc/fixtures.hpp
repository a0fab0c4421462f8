#pragma once

#include <string>
#include <vector>

#include "fecc/element.hpp"

// Deliberately corrupted elements. Each one breaks a single ingredient so
// that exactly the verifier guarding that ingredient reports a failure.
namespace fecc::fixtures {

/// Rows 1 and 2 of the stored M0 swapped; functionals, bases and alpha intact.
Element1D swapped_basis_rows(const Element1D& e);

/// 1-form functional 1 replaced by v'(0) instead of v(0). Needs m >= 1.
/// Stored matrices are left as built.
Element1D wrong_functional_order(const Element1D& e);

/// Rows 1 and 2 of alpha1 swapped. Needs n >= 2.
Element1D permuted_alpha1_rows(const Element1D& e);

/// Names accepted by the CLI: swapped-basis, wrong-functional-order,
/// permuted-alpha, flipped-theta.
const std::vector<std::string>& names();

}  // namespace fecc::fixtures
