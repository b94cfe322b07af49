#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "orthokit/complex_matrix.hpp"
#include "orthokit/linalg.hpp"
#include "orthokit/verdict.hpp"

namespace orthokit {

struct RangeOrthQuery {
    ComplexMatrix a;
    ComplexMatrix b;
    int trials = 1000;
    ToleranceConfig cfg;
};

struct IsometryFamilyQuery {
    std::vector<ComplexMatrix> members;   // A_j
    std::vector<ComplexMatrix> targets;   // P_j, PSD
    int trials = 100;
    ToleranceConfig cfg;
};

/// True iff A*B = 0 within tol * |A| * |B|.
bool check_range_orthogonal(const ComplexMatrix& a, const ComplexMatrix& b,
                            const ToleranceConfig& cfg = {});

struct MetricInequalityResult {
    bool all_hold = true;
    double worst_slack = 0.0;
    std::optional<std::pair<ComplexMatrix, ComplexMatrix>> witness;  // (X, Y) with |AX+BY| < |AX|
};

/// Samples |AX| <= |AX + BY| over seeded Gaussian X, Y. A strict violation
/// witnesses A*B != 0.
MetricInequalityResult metric_inequality_test(const RangeOrthQuery& q);

struct MajorizationResult {
    bool dominated = false;  // B*B <= A*A
    std::optional<ComplexMatrix> witness;  // X with |BX| > |AX|, when not dominated
    double witness_gap = 0.0;
};

/// Decides B*B <= A*A; when false, constructs the positive-part witness
/// X = (t B*B - A*A)_+ by a t-scan with bisection refinement toward 1.
MajorizationResult majorization_test(const ComplexMatrix& a, const ComplexMatrix& b, int trials,
                                     const ToleranceConfig& cfg = {});

struct IsometryIdentityResult {
    bool algebraic = false;   // A_j*A_j = P_j and A_k*A_j = 0 for k != j
    bool consistent = false;  // |sum A_j X_j|^2 = |sum X_j* P_j X_j| on random draws
    double worst_rel_err = 0.0;
};

IsometryIdentityResult check_isometry_identity(const IsometryFamilyQuery& q);

/// Certificate for unit-norm pairs with A*B = 0: orthogonal iff the top
/// eigenspaces of A*A and B*B intersect. Exact in finite dimension.
OrthoVerdict pythagoras_via_state(const ComplexMatrix& a, const ComplexMatrix& b,
                                  const ToleranceConfig& cfg = {});

}  // namespace orthokit
