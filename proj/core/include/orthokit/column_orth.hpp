#pragma once

#include <vector>

#include "orthokit/complex_matrix.hpp"
#include "orthokit/linalg.hpp"
#include "orthokit/verdict.hpp"

namespace orthokit {

/// A finite family C_1, ..., C_k of equal-shape matrices.
struct ColumnFamily {
    std::vector<ComplexMatrix> members;
    ToleranceConfig cfg;
};

struct ColumnReport {
    OrthoStatus status = OrthoStatus::Inconclusive;
    double row_norm = 0.0;           // |sum_j C_j C_j*|
    std::size_t common_unit_dim = 0;  // dim of the common top eigenspace at 1
    ComplexMatrix witness;            // common unit vector when certified
};

/// The family satisfies |sum_j a_j (x) C_j|^2 = |sum_j a_j* a_j| for all
/// coefficient matrices a_j iff |sum_j C_j C_j*| <= 1 and the eigenspaces of
/// the C_j* C_j at eigenvalue 1 intersect nontrivially.
ColumnReport check_column_orthonormal(const ColumnFamily& family);

struct CoefficientIdentityResult {
    bool pass = true;
    double worst_rel_err = 0.0;
    int worst_trial = -1;
};

/// Samples coefficient matrices a_j in M_n (the first trial always takes
/// a_j = I) and compares |sum a_j (x) C_j|^2 with |sum a_j* a_j|.
CoefficientIdentityResult coefficient_identity_test(const ColumnFamily& family, std::size_t n,
                                                    int trials);

/// Gram matrix G(j, k) = <C_k xi, C_j xi> at a unit vector xi.
ComplexMatrix gram_at_state(const ColumnFamily& family, const ComplexMatrix& xi);

}  // namespace orthokit
