#pragma once

#include <vector>

#include "fecc/report.hpp"
#include "fecc/tensor.hpp"

namespace fecc {

/// Rank-one monomial probes x^{a_1} (x) ... (x) x^{a_N}, one set per chi in
/// chi_nu, with every a_l <= max_degree.
std::vector<RankOneForm> tensor_monomial_probes(int N, int nu, int max_degree);

/// I_{nu+1}(du) - d(I_nu u) is the zero form for every probe, compared on
/// finite element coefficients. Witness indices: probe, chi block, then the
/// 1-based basis multi-index of the first nonzero residual entry.
VerificationReport verify_tensor_commutation(int N, int nu, const std::vector<RankOneForm>& probes,
                                             const Element1D& e, ThetaSign sign = ThetaSign::standard);

/// d(d(phi)) = 0 for every rank-one basis element of degree nu <= N-2,
/// computed on monomial coefficients. N = 1 passes vacuously.
VerificationReport verify_dd_zero(int N, const Element1D& e, ThetaSign sign = ThetaSign::standard);

/// Bookkeeping of the tensor spaces for every nu:
///   chi_nu has C(N, nu) distinct vectors of weight nu
///   space_dimension matches the enumerated basis and functionals
///   each block node matrix equals the Kronecker product of the 1D matrices
///   blocks with at most `invert_limit` rows are inverted directly
///   d maps degree nu into degree nu+1 with the expected block shapes
VerificationReport verify_tensor_dimensions(int N, const Element1D& e, std::size_t invert_limit = 64);

/// max over coefficients of |I_{nu+1}(du) - d(I_nu u)| for a smooth form.
double tensor_smooth_commutation_residual(const SmoothForm& u, const Element1D& e, int quadrature_order);

}  // namespace fecc
