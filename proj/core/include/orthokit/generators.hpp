#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "orthokit/complex_matrix.hpp"

namespace orthokit {

struct MatrixPair {
    ComplexMatrix a;
    ComplexMatrix b;
};

/// 2x2 pair: A the lower shift, B the projection onto the first coordinate.
MatrixPair canonical_pair();

/// 3x3 pair: A carries a corner entry plus a middle column (alpha, beta),
/// B = diag(1, b, 0). Requires 0 < b < 1, beta != 0 and
/// |alpha|^2 <= (1 - |beta|^2)(1 - b^2); always orthogonal.
MatrixPair corner_pair(double b, cplx alpha, cplx beta);

/// 3x2 trigonometric pair with unimodular twists u, v, w; always orthogonal.
MatrixPair trig_pair(double phi, double psi, cplx u, cplx v, cplx w);

/// n x n pair (n even): B a rank-n/2 projection, A a partial isometry with
/// A*A = B and AA* = I - B, both conjugated by a seeded random unitary.
/// Throws OddDimension for odd n.
MatrixPair partial_isometry_pair(std::size_t n, std::uint64_t seed);

/// 3x3 pair against the rank-1 projection B = e1 e1*: A supported on the
/// first column below the diagonal entry. Requires |b1|^2 + |b2|^2 = 1.
MatrixPair rank1_column_pair(cplx b1, cplx b2, bool transposed = false);

/// 3x3 pair against B = e1 e1* with a diagonal middle block entry alpha.
/// Requires |a1|^2 + |b2|^2 = 1, 0 < alpha <= 1 and |b2| = alpha or |b2| = 1.
MatrixPair rank1_diagonal_pair(cplx a1, double alpha, cplx b2, bool transposed = false);

/// k members of a d x d column-orthonormal family: C_j = e_j e_1*.
std::vector<ComplexMatrix> column_canonical(std::size_t k, std::size_t d);

/// Named generator dispatch for the command line.
struct FamilySpec {
    std::string name;
    std::map<std::string, double> params;  // complex params split as <key>_re / <key>_im
};

std::vector<std::string> family_names();
MatrixPair generate(const FamilySpec& spec);

}  // namespace orthokit
