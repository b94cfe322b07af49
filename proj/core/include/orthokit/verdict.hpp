#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "orthokit/complex_matrix.hpp"

namespace orthokit {

enum class OrthoStatus {
    CertifiedOrthogonal,
    CertifiedNotOrthogonal,
    ConsistentAtTolerance,
    Inconclusive,
};

/// Which certificate or refuter decided (or contributed to) a verdict.
enum class VerdictReason {
    None,
    CommonNormingState,     // A*B = 0 and the top eigenspaces of A*A, B*B intersect
    NoCommonNormingState,   // A*B = 0 but the top eigenspaces are disjoint
    Rank1Conditions,        // recursive block conditions hold for a rank-1 projection B
    Rank1ConditionViolation,
    Rank1DiagonalBlockNonzero,  // nonzero compression of A onto range(B)
    SelfadjointPositivePair,    // both selfadjoint, one positive: never orthogonal
    DetIdentityViolation,       // det(A + lambda B) not identically zero
    NormingVectorViolation,     // a norming vector of B with <A xi, xi> != 0
    GridDefectViolation,        // sampled defect off zero beyond tolerance
    GridConsistent,
    HalfBallViolation,      // joint spectrum point outside the closed half-ball
    CoverageGapViolation,   // joint spectrum misses part of the hemisphere
    ConeViolation,          // sampled state outside the admissible cone
    Contradiction,          // certificate and grid refutation both fired
    TrivialZero,
};

std::string_view to_string(OrthoStatus s);
std::string_view to_string(VerdictReason r);

struct DefectSample {
    cplx lambda;
    double defect;
};

/// Sampled values of d(lambda) = 1 + |lambda|^2 - |A + lambda B|^2
/// for a unit-norm pair.
struct DefectProfile {
    std::vector<DefectSample> samples;
    double min_defect = 0.0;
    double max_abs_defect = 0.0;
    cplx argmin_lambda;
};

struct OrthoVerdict {
    OrthoStatus status = OrthoStatus::Inconclusive;
    VerdictReason reason = VerdictReason::None;
    std::optional<cplx> witness_lambda;
    std::optional<ComplexMatrix> witness_vector;
    std::optional<DefectProfile> profile;
};

}  // namespace orthokit
