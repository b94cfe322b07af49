#include "orthokit/range_orth.hpp"

#include <array>
#include <cmath>
#include <limits>

#include "orthokit/errors.hpp"
#include "orthokit/rng.hpp"

namespace orthokit {

bool check_range_orthogonal(const ComplexMatrix& a, const ComplexMatrix& b,
                            const ToleranceConfig& cfg) {
    if (a.rows() != b.rows()) throw ShapeMismatch("check_range_orthogonal: row counts differ");
    const double na = operator_norm(a);
    const double nb = operator_norm(b);
    return operator_norm(a.adjoint() * b) <= cfg.rel_tol * std::max(na * nb, 1e-300);
}

MetricInequalityResult metric_inequality_test(const RangeOrthQuery& q) {
    Rng rng(q.cfg.rng_seed);
    const std::size_t n = q.a.cols();
    MetricInequalityResult out;
    out.worst_slack = std::numeric_limits<double>::infinity();
    for (int trial = 0; trial < q.trials; ++trial) {
        ComplexMatrix x = rng.gaussian(n, n);
        ComplexMatrix y = rng.gaussian(n, n);
        const double nx = operator_norm(x), ny = operator_norm(y);
        if (nx > 0.0) x *= cplx{1.0 / nx, 0.0};
        if (ny > 0.0) y *= cplx{1.0 / ny, 0.0};
        const double slack = operator_norm(q.a * x + q.b * y) - operator_norm(q.a * x);
        if (slack < out.worst_slack) out.worst_slack = slack;
        if (slack < -q.cfg.rel_tol && !out.witness) {
            out.all_hold = false;
            out.witness = {x, y};
        }
    }
    return out;
}

MajorizationResult majorization_test(const ComplexMatrix& a, const ComplexMatrix& b, int trials,
                                     const ToleranceConfig& cfg) {
    if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows())
        throw ShapeMismatch("majorization_test: expects square matrices of equal size");
    const ComplexMatrix aa = a.adjoint() * a;
    const ComplexMatrix bb = b.adjoint() * b;
    const ComplexMatrix diff = aa - bb;
    const double scale = std::max(aa.frobenius_norm() + bb.frobenius_norm(), 1.0);
    const auto eig = hermitian_eig(diff, cfg);
    MajorizationResult out;
    out.dominated = eig.eigenvalues.front() >= -cfg.rel_tol * scale;
    if (out.dominated) {
        Rng rng(cfg.rng_seed);
        for (int t = 0; t < trials; ++t) {
            const ComplexMatrix x = rng.gaussian(a.rows(), a.cols());
            const double gap = operator_norm(b * x) - operator_norm(a * x);
            if (gap > cfg.rel_tol * scale)
                throw WitnessNotFound(
                    "majorization_test: dominated pair violated |BX| <= |AX| on a random draw");
        }
        return out;
    }
    auto try_t = [&](double t) -> bool {
        const ComplexMatrix x = positive_part(bb * cplx{t, 0.0} - aa, cfg);
        if (x.frobenius_norm() <= 1e-14 * scale) return false;
        const double gap = operator_norm(b * x) - operator_norm(a * x);
        if (gap > cfg.rel_tol) {
            out.witness = x;
            out.witness_gap = gap;
            return true;
        }
        return false;
    };
    for (double t = 0.1; t < 0.95; t += 0.1)
        if (try_t(t)) return out;
    // All coarse t failed: bisect toward 1, where the positive part must
    // eventually become nonzero.
    double t = 0.9;
    for (int k = 0; k < 40; ++k) {
        t = 0.5 * (t + 1.0);
        if (try_t(t)) return out;
    }
    throw WitnessNotFound("majorization_test: no positive-part witness found (tolerance pathology)");
}

IsometryIdentityResult check_isometry_identity(const IsometryFamilyQuery& q) {
    if (q.members.size() != q.targets.size())
        throw ShapeMismatch("check_isometry_identity: member/target counts differ");
    if (q.members.empty()) throw EmptyFamily("check_isometry_identity: empty family");
    const ToleranceConfig& cfg = q.cfg;

    IsometryIdentityResult out;
    out.algebraic = true;
    for (std::size_t j = 0; j < q.members.size(); ++j) {
        if (operator_norm(q.members[j].adjoint() * q.members[j] - q.targets[j]) >
            std::sqrt(cfg.abs_tol))
            out.algebraic = false;
        for (std::size_t k = 0; k < q.members.size(); ++k)
            if (k != j &&
                operator_norm(q.members[k].adjoint() * q.members[j]) > std::sqrt(cfg.abs_tol))
                out.algebraic = false;
    }

    Rng rng(cfg.rng_seed);
    const std::size_t n = q.members[0].cols();
    out.consistent = true;
    for (int trial = 0; trial < q.trials; ++trial) {
        std::vector<ComplexMatrix> xs;
        xs.reserve(q.members.size());
        for (std::size_t j = 0; j < q.members.size(); ++j) xs.push_back(rng.gaussian(n, n));
        ComplexMatrix lhs(q.members[0].rows(), n);
        ComplexMatrix rhs(n, n);
        for (std::size_t j = 0; j < q.members.size(); ++j) {
            lhs += q.members[j] * xs[j];
            rhs += xs[j].adjoint() * q.targets[j] * xs[j];
        }
        const double l = operator_norm(lhs);
        const double r = operator_norm(rhs);
        const double rel = std::abs(l * l - r) / std::max(r, 1.0);
        out.worst_rel_err = std::max(out.worst_rel_err, rel);
        if (rel > std::sqrt(cfg.abs_tol)) out.consistent = false;
    }
    return out;
}

OrthoVerdict pythagoras_via_state(const ComplexMatrix& a, const ComplexMatrix& b,
                                  const ToleranceConfig& cfg) {
    const double na = operator_norm(a);
    const double nb = operator_norm(b);
    if (operator_norm(a.adjoint() * b) > std::sqrt(cfg.abs_tol) * std::max(na * nb, 1e-300))
        throw PreconditionViolated("pythagoras_via_state: A*B != 0");

    const ComplexMatrix aa = a.adjoint() * a;
    const ComplexMatrix bb = b.adjoint() * b;
    const ComplexMatrix ea = eigenspace(aa, na * na, cfg.rel_tol * std::max(na * na, 1e-300), cfg);
    const ComplexMatrix eb = eigenspace(bb, nb * nb, cfg.rel_tol * std::max(nb * nb, 1e-300), cfg);
    const std::array<ComplexMatrix, 2> bases{ea, eb};
    const ComplexMatrix common = subspace_intersection(bases, cfg);

    OrthoVerdict v;
    if (common.cols() > 0) {
        v.status = OrthoStatus::CertifiedOrthogonal;
        v.reason = VerdictReason::CommonNormingState;
        v.witness_vector = common.col(0);
    } else {
        v.status = OrthoStatus::CertifiedNotOrthogonal;
        v.reason = VerdictReason::NoCommonNormingState;
    }
    return v;
}

}  // namespace orthokit
