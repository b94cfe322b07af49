#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "orthokit/complex_matrix.hpp"

namespace orthokit {

struct ToleranceConfig {
    double abs_tol = 1e-10;
    double rel_tol = 1e-8;
    int eig_sweeps = 50;
    std::uint64_t rng_seed = 0;
};

/// Full spectral decomposition of a Hermitian matrix.
/// eigenvalues ascending; eigenvectors(:, i) pairs with eigenvalues[i].
struct HermitianEig {
    std::vector<double> eigenvalues;
    ComplexMatrix eigenvectors;
};

/// Cyclic Jacobi eigensolver for complex Hermitian matrices.
/// Throws NotHermitian / NoConvergence.
HermitianEig hermitian_eig(const ComplexMatrix& m, const ToleranceConfig& cfg = {});

/// Largest singular value (0 for the zero matrix).
double operator_norm(const ComplexMatrix& m);

/// B = U * P with U unitary and P = sqrt(B*B) PSD. Square B only; the
/// partial isometry is completed to a unitary on ker|B|.
std::pair<ComplexMatrix, ComplexMatrix> polar_unitary(const ComplexMatrix& b,
                                                      const ToleranceConfig& cfg = {});

/// PSD square root; eigenvalues in (-sqrt(abs_tol), 0) clamp to 0,
/// anything below -sqrt(abs_tol) throws NotPSD.
ComplexMatrix psd_sqrt(const ComplexMatrix& p, const ToleranceConfig& cfg = {});

/// Spectral restriction of a Hermitian matrix to its positive eigenvalues.
ComplexMatrix positive_part(const ComplexMatrix& h, const ToleranceConfig& cfg = {});

/// Orthonormal basis of span{v_i : |lambda_i - mu| <= tol}; 0-column result if empty.
ComplexMatrix eigenspace(const ComplexMatrix& m, double mu, double tol,
                         const ToleranceConfig& cfg = {});

/// Orthonormal basis of the intersection of the spans of the given
/// orthonormal bases, via the kernel of sum_j (I - Q_j Q_j*).
ComplexMatrix subspace_intersection(std::span<const ComplexMatrix> bases,
                                    const ToleranceConfig& cfg = {});

/// Determinant by LU with partial pivoting.
cplx determinant(ComplexMatrix m);

}  // namespace orthokit
