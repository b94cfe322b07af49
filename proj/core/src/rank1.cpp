#include "orthokit/rank1.hpp"

#include <cmath>

#include "orthokit/errors.hpp"

namespace orthokit {

namespace {

double cert_tol(const ToleranceConfig& cfg) { return std::sqrt(cfg.abs_tol) * 0.1; }

/// Orthonormal Krylov basis of span{v, Tv, T^2 v, ...}.
ComplexMatrix krylov_basis(const ComplexMatrix& t, const ComplexMatrix& v0) {
    ComplexMatrix basis(v0.rows(), 0);
    ComplexMatrix v = v0;
    for (std::size_t step = 0; step <= v0.rows(); ++step) {
        ComplexMatrix w = v;
        for (int pass = 0; pass < 2; ++pass)
            for (std::size_t k = 0; k < basis.cols(); ++k) {
                const ComplexMatrix bk = basis.col(k);
                w -= inner(w, bk) * bk;
            }
        const double nrm = vector_norm(w);
        if (nrm < 1e-9) break;
        w *= cplx{1.0 / nrm, 0.0};
        basis = basis.hcat(w);
        v = t * w;
    }
    return basis;
}

}  // namespace

Rank1Decomposition decompose_rank1(const ComplexMatrix& a, const ComplexMatrix& b,
                                   const ToleranceConfig& cfg) {
    const std::size_t d = a.rows();
    if (a.cols() != d || b.rows() != d || b.cols() != d)
        throw ShapeMismatch("decompose_rank1: expects square matrices of equal size");
    if (d < 2) throw ShapeMismatch("decompose_rank1: dimension must be at least 2");
    const double ptol = std::sqrt(cfg.abs_tol);
    if (!is_hermitian(b, ptol) || operator_norm(b * b - b) > ptol ||
        std::abs(b.trace() - cplx{1.0, 0.0}) > ptol)
        throw NotRank1Projection("decompose_rank1: B is not a rank-1 projection");

    const auto eig = hermitian_eig(b, cfg);
    // First basis vector spans range(B); the rest is an orthonormal kernel basis.
    ComplexMatrix basis(d, d);
    basis.set_col(0, eig.eigenvectors.col(d - 1));
    for (std::size_t k = 0; k + 1 < d; ++k) basis.set_col(k + 1, eig.eigenvectors.col(k));

    const ComplexMatrix at = basis.adjoint() * a * basis;
    if (std::abs(at(0, 0)) > ptol)
        throw Refuted11Block("decompose_rank1: nonzero compression of A onto range(B)");

    Rank1Decomposition dec;
    dec.basis = basis;
    dec.a = ComplexMatrix(d - 1, 1);
    dec.b = ComplexMatrix(d - 1, 1);
    dec.c = ComplexMatrix(d - 1, d - 1);
    for (std::size_t i = 0; i + 1 < d; ++i) {
        dec.a(i, 0) = std::conj(at(0, i + 1));
        dec.b(i, 0) = at(i + 1, 0);
        for (std::size_t j = 0; j + 1 < d; ++j) dec.c(i, j) = at(i + 1, j + 1);
    }
    dec.t = ComplexMatrix::identity(d - 1) - dec.a * dec.a.adjoint() - dec.c.adjoint() * dec.c;
    const double nb = vector_norm(dec.b);
    dec.gamma = nb < 1.0 - 1e-12 ? 1.0 / (1.0 - nb * nb) : 0.0;
    return dec;
}

Rank1ConditionReport rank1_conditions(const Rank1Decomposition& dec, const ToleranceConfig& cfg) {
    const double tol = cert_tol(cfg);
    const double na2 = inner(dec.a, dec.a).real();
    const double nb2 = inner(dec.b, dec.b).real();

    Rank1ConditionReport rep;
    rep.norm_split_residual = std::abs(na2 + nb2 - 1.0);
    if (rep.norm_split_residual > tol)
        throw NormSplitViolated("rank1_conditions: |a|^2 + |b|^2 != 1");

    const std::size_t dm = dec.a.rows();
    const ComplexMatrix cb = dec.c.adjoint() * dec.b;

    if (nb2 > (1.0 - std::sqrt(cfg.abs_tol)) * (1.0 - std::sqrt(cfg.abs_tol))) {
        // |b| = 1 edge case: positivity of the block form forces a = 0, C*b = 0.
        rep.cross_residuals.push_back(std::sqrt(na2));
        rep.recursion_residuals.push_back(vector_norm(cb));
        rep.pass = rep.cross_residuals[0] <= tol && rep.recursion_residuals[0] <= tol;
        if (!rep.pass) rep.first_violation = rep.cross_residuals[0] > tol ? 0 : 1;
        return rep;
    }

    ComplexMatrix tn_cb = cb;       // T^n C* b
    ComplexMatrix tn1_a = dec.t * dec.a;  // T^{n+1} a
    rep.pass = true;
    for (std::size_t n = 0; n <= dm; ++n) {
        const double cross = std::abs(inner(tn_cb, dec.a));
        const double rec = std::abs(inner(tn_cb, cb) - inner(tn1_a, dec.a));
        rep.cross_residuals.push_back(cross);
        rep.recursion_residuals.push_back(rec);
        tn_cb = dec.t * tn_cb;
        tn1_a = dec.t * tn1_a;
    }
    for (std::size_t i = 0; i < rep.cross_residuals.size(); ++i) {
        if (rep.cross_residuals[i] > tol || rep.recursion_residuals[i] > tol) {
            rep.pass = false;
            rep.first_violation = rep.cross_residuals[i] > tol ? 2 * i : 2 * i + 1;
            break;
        }
    }

    const ComplexMatrix ca = dec.c * dec.a;
    const ComplexMatrix cbv = dec.c * dec.b;
    rep.identity_sq_residual =
        std::abs(inner(ca, ca).real() + inner(cbv, cbv).real() - na2 * nb2);
    const ComplexMatrix c2a = dec.c * ca;
    const ComplexMatrix c2b = dec.c * cbv;
    rep.identity_quartic_residual =
        std::abs(inner(c2a, c2a).real() + inner(c2b, c2b).real() -
                 (na2 * inner(cbv, cbv).real() + nb2 * inner(ca, ca).real()));

    if (is_hermitian(dec.c, std::sqrt(cfg.abs_tol))) {
        ComplexMatrix c2n_a = dec.a;  // C^{2n} a
        const ComplexMatrix c2 = dec.c * dec.c;
        for (std::size_t n = 0; n < dm; ++n) {
            rep.power_orthogonality_residuals.push_back(std::abs(inner(c2n_a, cbv)));
            c2n_a = c2 * c2n_a;
        }
        // Per-eigenspace components for the nonzero eigenvalues of C.
        const auto eig = hermitian_eig(dec.c, cfg);
        const double emax = std::max(std::abs(eig.eigenvalues.front()),
                                     std::abs(eig.eigenvalues.back()));
        std::size_t k = 0;
        while (k < dm) {
            if (std::abs(eig.eigenvalues[k]) <= 1e-8 * std::max(emax, 1.0)) {
                ++k;
                continue;
            }
            std::size_t end = k + 1;
            while (end < dm &&
                   std::abs(eig.eigenvalues[end] - eig.eigenvalues[k]) <=
                       1e-6 * std::max(emax, 1.0))
                ++end;
            cplx comp = 0.0;
            for (std::size_t j = k; j < end; ++j) {
                const ComplexMatrix vj = eig.eigenvectors.col(j);
                comp += inner(dec.a, vj) * std::conj(inner(dec.b, vj));
            }
            rep.eigencomponent_residuals.push_back(std::abs(comp));
            k = end;
        }
    }
    return rep;
}

OrthoVerdict rank1_certify(const ComplexMatrix& a, const ComplexMatrix& b,
                           const ToleranceConfig& cfg) {
    ComplexMatrix an = a;
    const double na = operator_norm(a);
    if (na <= 0.0) throw ZeroOperator("rank1_certify: A = 0");
    an *= cplx{1.0 / na, 0.0};

    OrthoVerdict v;
    Rank1Decomposition dec;
    try {
        dec = decompose_rank1(an, b, cfg);
    } catch (const Refuted11Block&) {
        v.status = OrthoStatus::CertifiedNotOrthogonal;
        v.reason = VerdictReason::Rank1DiagonalBlockNonzero;
        return v;
    }

    // Reduce to C >= 0 by a one-sided unitary on the complement; a and T are
    // unchanged, b picks up the polar unitary.
    if (dec.c.frobenius_norm() > 0.0) {
        const auto [uc, pc] = polar_unitary(dec.c, cfg);
        dec.c = pc;
        dec.b = uc.adjoint() * dec.b;
    }

    try {
        const Rank1ConditionReport rep = rank1_conditions(dec, cfg);
        if (rep.pass) {
            v.status = OrthoStatus::CertifiedOrthogonal;
            v.reason = VerdictReason::Rank1Conditions;
        } else {
            v.status = OrthoStatus::CertifiedNotOrthogonal;
            v.reason = VerdictReason::Rank1ConditionViolation;
        }
    } catch (const NormSplitViolated&) {
        v.status = OrthoStatus::CertifiedNotOrthogonal;
        v.reason = VerdictReason::Rank1ConditionViolation;
    }
    return v;
}

std::optional<ComplexMatrix> construct_prop_operator(const ComplexMatrix& a,
                                                     const ComplexMatrix& c,
                                                     const ComplexMatrix& u,
                                                     const ToleranceConfig& cfg) {
    const std::size_t dm = a.rows();
    if (a.cols() != 1 || c.rows() != dm || c.cols() != dm || u.rows() != dm || u.cols() != dm)
        throw ShapeMismatch("construct_prop_operator: inconsistent shapes");
    const double tol = std::sqrt(cfg.abs_tol);
    const double na2 = inner(a, a).real();
    if (na2 > 1.0 + tol) throw PreconditionViolated("construct_prop_operator: |a| > 1");
    if (!is_hermitian(c, tol)) throw PreconditionViolated("construct_prop_operator: C not Hermitian");
    if (!is_hermitian(u, tol) || operator_norm(u * u - ComplexMatrix::identity(dm)) > tol)
        throw PreconditionViolated("construct_prop_operator: U not a self-adjoint unitary");

    const ComplexMatrix t = ComplexMatrix::identity(dm) - a * a.adjoint() - c * c;
    if (operator_norm(u * t - t * u) > tol)
        throw PreconditionViolated("construct_prop_operator: U does not commute with T");
    const ComplexMatrix tsqrt = psd_sqrt(t, cfg);

    // Cyclic-subspace orthogonality: U applied to the Krylov space of T^{1/2} a
    // must be orthogonal to the Krylov space of a.
    const ComplexMatrix k1 = krylov_basis(t, a);
    const ComplexMatrix k2 = krylov_basis(t, tsqrt * a);
    if (k1.cols() > 0 && k2.cols() > 0 &&
        operator_norm(k1.adjoint() * (u * k2)) > tol)
        throw PreconditionViolated("construct_prop_operator: cyclic subspaces not orthogonal under U");

    // Least-squares solve C b = U T^{1/2} a on range(C); kernel carries the
    // remaining norm.
    const ComplexMatrix rhs = u * (tsqrt * a);
    const auto eig = hermitian_eig(c, cfg);
    const double emax = std::max(std::abs(eig.eigenvalues.front()),
                                 std::abs(eig.eigenvalues.back()));
    ComplexMatrix b(dm, 1);
    std::optional<ComplexMatrix> kernel_dir;
    for (std::size_t k = 0; k < dm; ++k) {
        const ComplexMatrix vk = eig.eigenvectors.col(k);
        const cplx comp = inner(rhs, vk);
        if (std::abs(eig.eigenvalues[k]) > 1e-10 * std::max(emax, 1.0)) {
            b += (comp / eig.eigenvalues[k]) * vk;
        } else {
            if (std::abs(comp) > tol)
                throw NoSolution("construct_prop_operator: rhs has a component outside range(C)");
            if (!kernel_dir) kernel_dir = vk;
        }
    }
    const double target = 1.0 - na2;
    const double s = inner(b, b).real();
    if (s > target + tol) throw NoSolution("construct_prop_operator: minimal solution too large");
    const double deficit = std::max(target - s, 0.0);
    if (deficit > tol) {
        if (!kernel_dir)
            throw NoSolution("construct_prop_operator: no kernel direction to carry the norm");
        b += cplx{std::sqrt(deficit), 0.0} * *kernel_dir;
    }

    const std::size_t d = dm + 1;
    ComplexMatrix out(d, d);
    for (std::size_t i = 0; i < dm; ++i) {
        out(0, i + 1) = std::conj(a(i, 0));
        out(i + 1, 0) = b(i, 0);
        for (std::size_t j = 0; j < dm; ++j) out(i + 1, j + 1) = c(i, j);
    }

    Rank1Decomposition dec;
    dec.a = a;
    dec.b = b;
    dec.c = c;
    dec.t = t;
    const double nb = vector_norm(b);
    dec.gamma = nb < 1.0 - 1e-12 ? 1.0 / (1.0 - nb * nb) : 0.0;
    dec.basis = ComplexMatrix::identity(d);
    try {
        if (!rank1_conditions(dec, cfg).pass) return std::nullopt;
    } catch (const NormSplitViolated&) {
        return std::nullopt;
    }
    return out;
}

}  // namespace orthokit
