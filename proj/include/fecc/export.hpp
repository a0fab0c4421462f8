#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "fecc/element.hpp"
#include "fecc/report.hpp"
#include "fecc/tensor.hpp"
#include "fecc/verify.hpp"

namespace fecc {

using Json = nlohmann::ordered_json;

/// Bumped whenever a field is renamed, removed or changes meaning.
inline constexpr int kSchemaVersion = 1;

/// Coefficients as "num/den" strings, lowest power first.
Json polynomial_to_json(const Polynomial& p);
/// Row-major array of rows of "num/den" strings.
Json matrix_to_json(const RationalMatrix& m);
Json functional_to_json(const NodeFunctional& f, int index, const std::string& name = "u");

/// Sections selected by `emit`: "functionals", "basis", "matrix" or "all".
Json element_to_json(const Element1D& e, const std::string& emit = "all");

Json report_to_json(const VerificationReport& r);

/// chi vectors, block shapes and functional descriptors of the N-dimensional
/// complex for every nu; with_matrices adds the Kronecker node matrices.
Json tensor_table_to_json(int N, const Element1D& e, bool with_matrices);

/// Fixed-width text rendering for terminals.
std::string element_to_text(const Element1D& e, const std::string& emit = "all");
std::string report_to_text(const VerificationReport& r);

/// Real value printed with 17 significant digits.
std::string format_real(double v);

/// CSV of every basis function on a uniform grid of [0,1]:
/// x, phi0_1..phi0_{n+1}, phi1_1..phi1_n.
std::string basis_samples_csv(const Element1D& e, int samples);

/// CSV of a 2D rank-one basis element on a samples x samples grid: x, y, value.
std::string tensor_basis_samples_csv(const Element1D& e, const CharacteristicVector& chi,
                                     std::span<const std::size_t> j, int samples);

/// Rows x, u, I0u, dI0u, I1du, residual for a smooth input.
std::string interpolation_samples_csv(const Element1D& e, const SmoothFunction1D& u, int quadrature_order,
                                      int samples);

/// Rows x, u, Iu, dIu, d2Iu, ... (orders 0..m) for the two-cell demo on [0,2].
std::string two_cell_samples_csv(const Element1D& e, const SmoothFunction1D& u, int quadrature_order, int samples);

}  // namespace fecc
