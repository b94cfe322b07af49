#pragma once

#include <optional>
#include <vector>

#include "orthokit/complex_matrix.hpp"
#include "orthokit/linalg.hpp"
#include "orthokit/verdict.hpp"

namespace orthokit {

/// Block data of a unit-norm operator relative to a rank-1 projection B,
/// in an orthonormal basis whose first vector spans range(B):
///   A = [[0, a*], [b, C]],  T = I - a a* - C*C.
struct Rank1Decomposition {
    ComplexMatrix a;  // (d-1)-vector
    ComplexMatrix b;  // (d-1)-vector
    ComplexMatrix c;  // (d-1) x (d-1)
    ComplexMatrix t;  // Hermitian by construction
    double gamma = 0.0;  // 1 / (1 - |b|^2), when |b| < 1
    ComplexMatrix basis;  // columns: the adapted orthonormal basis (first spans range(B))
};

/// Named residuals of the recursive block conditions and derived identities.
struct Rank1ConditionReport {
    bool pass = false;
    std::vector<double> cross_residuals;      // |a* T^n C* b|, n = 0..depth
    std::vector<double> recursion_residuals;  // |b* C T^n C* b - a* T^{n+1} a|
    double norm_split_residual = 0.0;         // | |a|^2 + |b|^2 - 1 |
    double identity_sq_residual = 0.0;        // | |Ca|^2 + |Cb|^2 - |a|^2 |b|^2 |
    double identity_quartic_residual = 0.0;   // the squared-power variant
    std::vector<double> power_orthogonality_residuals;  // |<C^{2n} a, C b>| (C Hermitian)
    std::vector<double> eigencomponent_residuals;  // |<a_j, b_j>| per C-eigenspace (C Hermitian)
    std::size_t first_violation = 0;  // index into the flattened residual list, when !pass
};

Rank1Decomposition decompose_rank1(const ComplexMatrix& a, const ComplexMatrix& b,
                                   const ToleranceConfig& cfg = {});

Rank1ConditionReport rank1_conditions(const Rank1Decomposition& dec,
                                      const ToleranceConfig& cfg = {});

/// Exact certificate when B is a rank-1 projection: decompose, reduce C to
/// PSD form, evaluate the recursive conditions.
OrthoVerdict rank1_certify(const ComplexMatrix& a, const ComplexMatrix& b,
                           const ToleranceConfig& cfg = {});

/// Assembles an operator orthogonal to the rank-1 projection e_0 e_0* from
/// the data (a, C, U): solves C b = U T^{1/2} a under |a|^2 + |b|^2 = 1.
/// Returns nullopt when the conditions fail on the assembled operator.
std::optional<ComplexMatrix> construct_prop_operator(const ComplexMatrix& a,
                                                     const ComplexMatrix& c,
                                                     const ComplexMatrix& u,
                                                     const ToleranceConfig& cfg = {});

}  // namespace orthokit
