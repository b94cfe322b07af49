#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "orthokit/complex_matrix.hpp"
#include "orthokit/linalg.hpp"
#include "orthokit/verdict.hpp"

namespace orthokit {

/// Sampling grid for lambda in the complex plane.
struct GridSpec {
    std::vector<double> radii;          // positive, ascending
    int angles_per_radius = 64;
    std::vector<cplx> extra_points = {cplx{0, 0}, cplx{1, 0}, cplx{-1, 0}, cplx{0, 1}, cplx{0, -1}};

    static GridSpec defaults();
    std::vector<cplx> points() const;
};

struct OrthoQuery {
    ComplexMatrix a;
    ComplexMatrix b;
    ToleranceConfig cfg;
    GridSpec grid = GridSpec::defaults();
};

struct NormalizedPair {
    ComplexMatrix a;
    ComplexMatrix b;
    double scale_a = 1.0;
    double scale_b = 1.0;
};

/// Divides each operator by its norm; throws ZeroOperator.
NormalizedPair normalize_pair(const ComplexMatrix& a, const ComplexMatrix& b);

/// Polar reduction: replaces (A, B) by (U*A, |B|) for the polar unitary U of B.
/// The orthogonality verdict is unchanged.
std::pair<ComplexMatrix, ComplexMatrix> reduce_to_positive(const ComplexMatrix& a,
                                                           const ComplexMatrix& b,
                                                           const ToleranceConfig& cfg = {});

/// M = (1 + |lambda|^2) I - (A + lambda B)*(A + lambda B) and its smallest
/// eigenvalue. Orthogonality at this lambda requires min_eig ~ 0 with M >= 0.
std::pair<ComplexMatrix, double> criterion_matrix(const ComplexMatrix& a, const ComplexMatrix& b,
                                                  cplx lambda, const ToleranceConfig& cfg = {});

/// Brute-force defect oracle over the grid; assumes unit norms.
DefectProfile defect_profile(const ComplexMatrix& a, const ComplexMatrix& b, const GridSpec& grid);

struct DetIdentityResult {
    bool holds = false;
    std::vector<cplx> coefficients;
    cplx worst_node;       // interpolation node with the largest |det|
    double worst_abs_det = 0.0;
};

/// Tests det(A + lambda B) == 0 identically, by interpolation at scaled
/// roots of unity and inverse DFT coefficient recovery.
DetIdentityResult det_identity_test(const ComplexMatrix& a, const ComplexMatrix& b,
                                    const ToleranceConfig& cfg = {});

/// B PSD with |B| = 1: every norming vector xi of B must satisfy
/// <A xi, xi> = 0. Returns a violating unit vector, or nullopt.
std::optional<ComplexMatrix> norming_orthogonality_test(const ComplexMatrix& a,
                                                        const ComplexMatrix& b,
                                                        const ToleranceConfig& cfg = {});

enum class ObstructionResult { NotApplicable, Refuted };

/// Nonzero selfadjoint pairs with one member positive are never orthogonal.
ObstructionResult selfadjoint_obstruction(const ComplexMatrix& a, const ComplexMatrix& b,
                                          const ToleranceConfig& cfg = {});

/// A Hermitian, B PSD, det(A + lambda B) == 0: a common kernel vector exists.
std::optional<ComplexMatrix> find_common_kernel(const ComplexMatrix& a, const ComplexMatrix& b,
                                                const ToleranceConfig& cfg = {});

/// Full decision pipeline.
OrthoVerdict check_pythagoras(const OrthoQuery& q);

}  // namespace orthokit
