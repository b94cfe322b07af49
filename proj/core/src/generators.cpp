#include "orthokit/generators.hpp"

#include <cmath>

#include "orthokit/errors.hpp"
#include "orthokit/rng.hpp"

namespace orthokit {

namespace {

constexpr double kParamTol = 1e-9;

void require(bool ok, const char* msg) {
    if (!ok) throw ParamConstraintViolated(msg);
}

}  // namespace

MatrixPair canonical_pair() {
    MatrixPair p;
    p.a = ComplexMatrix::from_rows({{0, 0}, {1, 0}});
    p.b = ComplexMatrix::from_rows({{1, 0}, {0, 0}});
    return p;
}

MatrixPair corner_pair(double b, cplx alpha, cplx beta) {
    require(b > 0.0 && b < 1.0, "corner_pair: requires 0 < b < 1");
    require(std::abs(beta) > 0.0, "corner_pair: requires beta != 0");
    require(std::norm(alpha) <= (1.0 - std::norm(beta)) * (1.0 - b * b) + kParamTol,
            "corner_pair: requires |alpha|^2 <= (1 - |beta|^2)(1 - b^2)");
    MatrixPair p;
    p.a = ComplexMatrix(3, 3);
    p.a(0, 2) = 1.0;
    p.a(1, 1) = alpha;
    p.a(2, 1) = beta;
    p.b = ComplexMatrix::diagonal(std::vector<double>{1.0, b, 0.0});
    return p;
}

MatrixPair trig_pair(double phi, double psi, cplx u, cplx v, cplx w) {
    require(std::abs(std::abs(u) - 1.0) <= kParamTol && std::abs(std::abs(v) - 1.0) <= kParamTol &&
                std::abs(std::abs(w) - 1.0) <= kParamTol,
            "trig_pair: requires unimodular u, v, w");
    const double sphi = std::sin(phi), cphi = std::cos(phi);
    const double spsi = std::sin(psi), cpsi = std::cos(psi);
    MatrixPair p;
    p.a = ComplexMatrix(3, 2);
    p.a(1, 0) = u * sphi * spsi;
    p.a(1, 1) = w * sphi * cpsi;
    p.a(2, 0) = v * cpsi;
    p.a(2, 1) = -std::conj(u) * v * w * spsi;
    p.b = ComplexMatrix(3, 2);
    p.b(0, 0) = 1.0;
    p.b(1, 1) = cphi;
    return p;
}

MatrixPair partial_isometry_pair(std::size_t n, std::uint64_t seed) {
    if (n == 0 || n % 2 != 0)
        throw OddDimension("partial_isometry_pair: requires a positive even dimension");
    const std::size_t k = n / 2;
    const std::size_t d = n;
    MatrixPair p;
    p.a = ComplexMatrix(d, d);
    p.b = ComplexMatrix(d, d);
    for (std::size_t i = 0; i < k; ++i) {
        p.a(k + i, i) = 1.0;
        p.b(i, i) = 1.0;
    }
    Rng rng(seed);
    const ComplexMatrix u = rng.unitary(d);
    p.a = u.adjoint() * p.a * u;
    p.b = u.adjoint() * p.b * u;
    return p;
}

MatrixPair rank1_column_pair(cplx b1, cplx b2, bool transposed) {
    require(std::abs(std::norm(b1) + std::norm(b2) - 1.0) <= kParamTol,
            "rank1_column_pair: requires |b1|^2 + |b2|^2 = 1");
    MatrixPair p;
    p.a = ComplexMatrix(3, 3);
    p.a(1, 0) = b1;
    p.a(2, 0) = b2;
    p.b = ComplexMatrix(3, 3);
    p.b(0, 0) = 1.0;
    if (transposed) p.a = p.a.transpose();
    return p;
}

MatrixPair rank1_diagonal_pair(cplx a1, double alpha, cplx b2, bool transposed) {
    require(std::abs(std::norm(a1) + std::norm(b2) - 1.0) <= kParamTol,
            "rank1_diagonal_pair: requires |a1|^2 + |b2|^2 = 1");
    require(alpha > 0.0 && alpha <= 1.0 + kParamTol, "rank1_diagonal_pair: requires 0 < alpha <= 1");
    require(std::abs(std::abs(b2) - alpha) <= kParamTol || std::abs(std::abs(b2) - 1.0) <= kParamTol,
            "rank1_diagonal_pair: requires |b2| = alpha or |b2| = 1");
    MatrixPair p;
    p.a = ComplexMatrix(3, 3);
    p.a(0, 1) = std::conj(a1);
    p.a(1, 1) = alpha;
    p.a(2, 0) = b2;
    p.b = ComplexMatrix(3, 3);
    p.b(0, 0) = 1.0;
    if (transposed) p.a = p.a.transpose();
    return p;
}

std::vector<ComplexMatrix> column_canonical(std::size_t k, std::size_t d) {
    if (k == 0 || k > d) throw TooMany("column_canonical: requires 0 < k <= d");
    std::vector<ComplexMatrix> out;
    out.reserve(k);
    for (std::size_t j = 0; j < k; ++j) {
        ComplexMatrix c(d, d);
        c(j, 0) = 1.0;
        out.push_back(c);
    }
    return out;
}

std::vector<std::string> family_names() {
    return {"canonical", "corner", "trig", "partial-isometry", "rank1-column", "rank1-diagonal"};
}

namespace {

double param(const FamilySpec& spec, const std::string& key, double fallback) {
    const auto it = spec.params.find(key);
    return it == spec.params.end() ? fallback : it->second;
}

cplx cparam(const FamilySpec& spec, const std::string& key, cplx fallback) {
    return {param(spec, key + "_re", fallback.real()), param(spec, key + "_im", fallback.imag())};
}

}  // namespace

MatrixPair generate(const FamilySpec& spec) {
    if (spec.name == "canonical") return canonical_pair();
    if (spec.name == "corner")
        return corner_pair(param(spec, "b", 0.5), cparam(spec, "alpha", {0.5, 0.0}),
                           cparam(spec, "beta", {0.6, 0.0}));
    if (spec.name == "trig")
        return trig_pair(param(spec, "phi", 0.7), param(spec, "psi", 0.4),
                         cparam(spec, "u", {1.0, 0.0}), cparam(spec, "v", {1.0, 0.0}),
                         cparam(spec, "w", {1.0, 0.0}));
    if (spec.name == "partial-isometry")
        return partial_isometry_pair(static_cast<std::size_t>(param(spec, "n", 4)),
                                     static_cast<std::uint64_t>(param(spec, "seed", 0)));
    if (spec.name == "rank1-column") {
        const cplx b1 = cparam(spec, "b1", {0.6, 0.0});
        const cplx b2 = cparam(spec, "b2", {0.8, 0.0});
        return rank1_column_pair(b1, b2, param(spec, "transposed", 0) != 0);
    }
    if (spec.name == "rank1-diagonal") {
        const cplx a1 = cparam(spec, "a1", {0.6, 0.0});
        const cplx b2 = cparam(spec, "b2", {0.8, 0.0});
        return rank1_diagonal_pair(a1, param(spec, "alpha", 0.8), b2,
                                   param(spec, "transposed", 0) != 0);
    }
    throw NotFound("generate: unknown family '" + spec.name + "'");
}

}  // namespace orthokit
