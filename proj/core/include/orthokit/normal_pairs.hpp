#pragma once

#include <utility>
#include <vector>

#include "orthokit/complex_matrix.hpp"
#include "orthokit/linalg.hpp"
#include "orthokit/verdict.hpp"

namespace orthokit {

/// Joint eigenvalue pairs of two commuting normal matrices, with the common
/// diagonalizer.
struct JointSpectrum {
    std::vector<std::pair<cplx, cplx>> points;
    ComplexMatrix diagonalizer;
};

struct ConePoint {
    double x = 0.0;
    double y = 0.0;
    cplx z;
};

/// Simultaneous diagonalization of a commuting normal pair.
/// Throws NotNormal / NotCommuting.
JointSpectrum joint_spectrum(const ComplexMatrix& a, const ComplexMatrix& b,
                             const ToleranceConfig& cfg = {});

/// Decides the pair via its joint spectrum: a point outside the closed unit
/// half-ball, or a gap in the hemisphere coverage, refutes. In finite
/// dimension the coverage gap is always positive, so the verdict is always
/// CertifiedNotOrthogonal.
OrthoVerdict check_normal_pair(const ComplexMatrix& a, const ComplexMatrix& b,
                               const ToleranceConfig& cfg = {});

struct ConeRefuterResult {
    bool refuted = false;
    std::vector<ConePoint> points;
    std::size_t witness_index = 0;  // when refuted
    double coverage_fraction = 0.0;  // diagnostic only, never a certificate
};

/// Samples states and tests the joint values (w(I-A*A), w(I-B*B), w(B*A))
/// against the cone |z| <= sqrt(x y), 0 <= x, y <= 1. One-sided: can only refute.
ConeRefuterResult cone_refuter(const ComplexMatrix& a, const ComplexMatrix& b, int n_samples,
                               const ToleranceConfig& cfg = {});

}  // namespace orthokit
