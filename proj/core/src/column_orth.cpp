#include "orthokit/column_orth.hpp"

#include <cmath>

#include "orthokit/errors.hpp"
#include "orthokit/rng.hpp"

namespace orthokit {

ColumnReport check_column_orthonormal(const ColumnFamily& family) {
    if (family.members.empty()) throw EmptyFamily("check_column_orthonormal: empty family");
    const auto& ms = family.members;
    const std::size_t rows = ms[0].rows();
    const std::size_t cols = ms[0].cols();
    for (const auto& m : ms)
        if (m.rows() != rows || m.cols() != cols)
            throw ShapeMismatch("check_column_orthonormal: members have mixed shapes");

    const ToleranceConfig& cfg = family.cfg;
    const double tol = std::sqrt(cfg.abs_tol);

    ComplexMatrix row_sum(rows, rows);
    for (const auto& m : ms) row_sum += m * m.adjoint();

    ColumnReport rep;
    rep.row_norm = operator_norm(row_sum);

    std::vector<ComplexMatrix> unit_spaces;
    unit_spaces.reserve(ms.size());
    bool empty_space = false;
    for (const auto& m : ms) {
        const ComplexMatrix space = eigenspace(m.adjoint() * m, 1.0, tol, cfg);
        if (space.cols() == 0) empty_space = true;
        unit_spaces.push_back(space);
    }
    if (rep.row_norm > 1.0 + tol || empty_space) {
        rep.status = OrthoStatus::CertifiedNotOrthogonal;
        return rep;
    }
    const ComplexMatrix common = subspace_intersection(unit_spaces, cfg);
    rep.common_unit_dim = common.cols();
    if (common.cols() > 0) {
        rep.status = OrthoStatus::CertifiedOrthogonal;
        rep.witness = common.col(0);
    } else {
        rep.status = OrthoStatus::CertifiedNotOrthogonal;
    }
    return rep;
}

CoefficientIdentityResult coefficient_identity_test(const ColumnFamily& family, std::size_t n,
                                                    int trials) {
    if (family.members.empty()) throw EmptyFamily("coefficient_identity_test: empty family");
    const auto& ms = family.members;
    const ToleranceConfig& cfg = family.cfg;
    Rng rng(cfg.rng_seed);

    CoefficientIdentityResult out;
    for (int trial = 0; trial < trials; ++trial) {
        std::vector<ComplexMatrix> coeffs;
        coeffs.reserve(ms.size());
        for (std::size_t j = 0; j < ms.size(); ++j)
            coeffs.push_back(trial == 0 ? ComplexMatrix::identity(n) : rng.gaussian(n, n));

        ComplexMatrix lhs(n * ms[0].rows(), n * ms[0].cols());
        ComplexMatrix rhs(n, n);
        for (std::size_t j = 0; j < ms.size(); ++j) {
            lhs += kron(coeffs[j], ms[j]);
            rhs += coeffs[j].adjoint() * coeffs[j];
        }
        const double l = operator_norm(lhs);
        const double r = operator_norm(rhs);
        const double rel = std::abs(l * l - r) / std::max(r, 1.0);
        if (rel > out.worst_rel_err) {
            out.worst_rel_err = rel;
            out.worst_trial = trial;
        }
    }
    out.pass = out.worst_rel_err <= std::sqrt(cfg.abs_tol);
    return out;
}

ComplexMatrix gram_at_state(const ColumnFamily& family, const ComplexMatrix& xi) {
    if (family.members.empty()) throw EmptyFamily("gram_at_state: empty family");
    const std::size_t k = family.members.size();
    ComplexMatrix g(k, k);
    std::vector<ComplexMatrix> images;
    images.reserve(k);
    for (const auto& m : family.members) images.push_back(m * xi);
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t l = 0; l < k; ++l) g(j, l) = inner(images[l], images[j]);
    return g;
}

}  // namespace orthokit
