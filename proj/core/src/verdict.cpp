#include "orthokit/verdict.hpp"

namespace orthokit {

std::string_view to_string(OrthoStatus s) {
    switch (s) {
        case OrthoStatus::CertifiedOrthogonal: return "certified-orthogonal";
        case OrthoStatus::CertifiedNotOrthogonal: return "certified-not-orthogonal";
        case OrthoStatus::ConsistentAtTolerance: return "consistent-at-tolerance";
        case OrthoStatus::Inconclusive: return "inconclusive";
    }
    return "unknown";
}

std::string_view to_string(VerdictReason r) {
    switch (r) {
        case VerdictReason::None: return "none";
        case VerdictReason::CommonNormingState: return "common-norming-state";
        case VerdictReason::NoCommonNormingState: return "no-common-norming-state";
        case VerdictReason::Rank1Conditions: return "rank1-block-conditions";
        case VerdictReason::Rank1ConditionViolation: return "rank1-condition-violation";
        case VerdictReason::Rank1DiagonalBlockNonzero: return "rank1-diagonal-block-nonzero";
        case VerdictReason::SelfadjointPositivePair: return "selfadjoint-positive-pair";
        case VerdictReason::DetIdentityViolation: return "det-identity-violation";
        case VerdictReason::NormingVectorViolation: return "norming-vector-violation";
        case VerdictReason::GridDefectViolation: return "grid-defect-violation";
        case VerdictReason::GridConsistent: return "grid-consistent";
        case VerdictReason::HalfBallViolation: return "half-ball-violation";
        case VerdictReason::CoverageGapViolation: return "hemisphere-coverage-gap";
        case VerdictReason::ConeViolation: return "cone-violation";
        case VerdictReason::Contradiction: return "contradictory-evidence";
        case VerdictReason::TrivialZero: return "zero-operator";
    }
    return "unknown";
}

}  // namespace orthokit
