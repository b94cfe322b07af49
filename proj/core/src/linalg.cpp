#include "orthokit/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "orthokit/errors.hpp"

namespace orthokit {

namespace {

double offdiag_frobenius(const ComplexMatrix& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
}

}  // namespace

HermitianEig hermitian_eig(const ComplexMatrix& m, const ToleranceConfig& cfg) {
    const std::size_t n = m.rows();
    if (n != m.cols()) throw NotHermitian("hermitian_eig: matrix not square");
    const double fro = m.frobenius_norm();
    {
        double asym = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j)
                asym = std::max(asym, std::abs(m(i, j) - std::conj(m(j, i))));
        if (asym > cfg.rel_tol * std::max(fro, 1e-300) && asym > cfg.abs_tol)
            throw NotHermitian("hermitian_eig: symmetry check failed");
    }

    // Work on the Hermitian average so roundoff in the input cannot bias updates.
    ComplexMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
    ComplexMatrix v = ComplexMatrix::identity(n);

    if (fro > 0.0) {
        const double stop = 1e-14 * fro;
        bool converged = false;
        for (int sweep = 0; sweep < cfg.eig_sweeps; ++sweep) {
            if (offdiag_frobenius(a) <= stop) {
                converged = true;
                break;
            }
            for (std::size_t p = 0; p + 1 < n; ++p) {
                for (std::size_t q = p + 1; q < n; ++q) {
                    const cplx apq = a(p, q);
                    const double mag = std::abs(apq);
                    if (mag <= 1e-300) continue;
                    const cplx phase = apq / mag;
                    const double app = a(p, p).real();
                    const double aqq = a(q, q).real();
                    const double tau = (aqq - app) / (2.0 * mag);
                    const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                                     (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                    const double c = 1.0 / std::sqrt(1.0 + t * t);
                    const double s = t * c;
                    // Plane rotation J = [[c*w, s*w], [-s, c]] with w = apq/|apq|;
                    // a <- J* a J, v <- v J.
                    const cplx j11 = c * phase, j12 = s * phase;
                    const double j21 = -s, j22 = c;
                    for (std::size_t i = 0; i < n; ++i) {
                        const cplx aip = a(i, p), aiq = a(i, q);
                        a(i, p) = aip * j11 + aiq * j21;
                        a(i, q) = aip * j12 + aiq * j22;
                    }
                    for (std::size_t j = 0; j < n; ++j) {
                        const cplx apj = a(p, j), aqj = a(q, j);
                        a(p, j) = std::conj(j11) * apj + j21 * aqj;
                        a(q, j) = std::conj(j12) * apj + j22 * aqj;
                    }
                    a(p, q) = 0.0;
                    a(q, p) = 0.0;
                    a(p, p) = cplx{a(p, p).real(), 0.0};
                    a(q, q) = cplx{a(q, q).real(), 0.0};
                    for (std::size_t i = 0; i < n; ++i) {
                        const cplx vip = v(i, p), viq = v(i, q);
                        v(i, p) = vip * j11 + viq * j21;
                        v(i, q) = vip * j12 + viq * j22;
                    }
                }
            }
        }
        if (!converged && offdiag_frobenius(a) > stop)
            throw NoConvergence("hermitian_eig: Jacobi sweeps exhausted");
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

    HermitianEig out;
    out.eigenvalues.resize(n);
    out.eigenvectors = ComplexMatrix(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        out.eigenvalues[k] = a(order[k], order[k]).real();
        for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, k) = v(i, order[k]);
    }
    return out;
}

double operator_norm(const ComplexMatrix& m) {
    if (m.frobenius_norm() == 0.0) return 0.0;
    // Gram matrix on the smaller side keeps the eigenproblem small.
    const ComplexMatrix g =
        m.rows() <= m.cols() ? m * m.adjoint() : m.adjoint() * m;
    const auto eig = hermitian_eig(g);
    const double top = eig.eigenvalues.back();
    return top > 0.0 ? std::sqrt(top) : 0.0;
}

std::pair<ComplexMatrix, ComplexMatrix> polar_unitary(const ComplexMatrix& b,
                                                      const ToleranceConfig& cfg) {
    const std::size_t n = b.rows();
    if (n != b.cols()) throw ShapeMismatch("polar_unitary: matrix not square");
    const auto eig = hermitian_eig(b.adjoint() * b, cfg);

    ComplexMatrix p(n, n);
    std::vector<double> sigma(n);
    for (std::size_t k = 0; k < n; ++k)
        sigma[k] = eig.eigenvalues[k] > 0.0 ? std::sqrt(eig.eigenvalues[k]) : 0.0;
    const double smax = sigma.empty() ? 0.0 : *std::max_element(sigma.begin(), sigma.end());
    {
        ComplexMatrix sd = ComplexMatrix::diagonal(std::span<const double>(sigma));
        p = eig.eigenvectors * sd * eig.eigenvectors.adjoint();
    }

    // Left singular vectors for nonzero sigma, then a Gram-Schmidt completion
    // against the standard basis on the kernel.
    const double cutoff = smax * 1e-12;
    std::vector<ComplexMatrix> ucols(n);
    std::vector<bool> fixed(n, false);
    std::vector<ComplexMatrix> taken;
    for (std::size_t k = 0; k < n; ++k) {
        if (sigma[k] <= cutoff) continue;
        ComplexMatrix u = b * eig.eigenvectors.col(k);
        // sigma[k] can be pure eigenvalue roundoff (~sqrt(eps)) for a kernel
        // direction; the image norm tells the truth, so classify and scale by it.
        const double image_norm = vector_norm(u);
        if (image_norm <= cutoff) continue;
        u *= cplx{1.0 / image_norm, 0.0};
        ucols[k] = u;
        fixed[k] = true;
        taken.push_back(u);
    }
    std::size_t next_basis = 0;
    for (std::size_t k = 0; k < n; ++k) {
        if (fixed[k]) continue;
        ComplexMatrix u(n, 1);
        double nrm = 0.0;
        while (next_basis < n) {
            u = ComplexMatrix::basis_vector(n, next_basis++);
            for (int pass = 0; pass < 2; ++pass)
                for (const auto& t : taken) u -= inner(u, t) * t;
            nrm = vector_norm(u);
            if (nrm > 0.5) break;
        }
        if (nrm <= 0.5) throw OrthokitError("polar_unitary: unitary completion failed");
        u *= cplx{1.0 / nrm, 0.0};
        ucols[k] = u;
        taken.push_back(u);
    }

    ComplexMatrix uleft(n, n);
    for (std::size_t k = 0; k < n; ++k) uleft.set_col(k, ucols[k]);
    ComplexMatrix u = uleft * eig.eigenvectors.adjoint();
    return {std::move(u), std::move(p)};
}

ComplexMatrix psd_sqrt(const ComplexMatrix& p, const ToleranceConfig& cfg) {
    const auto eig = hermitian_eig(p, cfg);
    const double hard = -std::sqrt(cfg.abs_tol);
    std::vector<double> s(eig.eigenvalues.size());
    for (std::size_t k = 0; k < s.size(); ++k) {
        const double lam = eig.eigenvalues[k];
        if (lam < hard) throw NotPSD("psd_sqrt: eigenvalue below -sqrt(abs_tol)");
        s[k] = lam > 0.0 ? std::sqrt(lam) : 0.0;
    }
    ComplexMatrix sd = ComplexMatrix::diagonal(std::span<const double>(s));
    return eig.eigenvectors * sd * eig.eigenvectors.adjoint();
}

ComplexMatrix positive_part(const ComplexMatrix& h, const ToleranceConfig& cfg) {
    if (!is_hermitian(h, cfg.rel_tol * std::max(h.frobenius_norm(), 1.0)))
        throw NotHermitian("positive_part: input not Hermitian");
    const auto eig = hermitian_eig(h, cfg);
    ComplexMatrix out(h.rows(), h.cols());
    for (std::size_t k = 0; k < eig.eigenvalues.size(); ++k) {
        const double lam = eig.eigenvalues[k];
        if (lam <= 0.0) continue;
        const ComplexMatrix vk = eig.eigenvectors.col(k);
        out += cplx{lam, 0.0} * (vk * vk.adjoint());
    }
    return out;
}

ComplexMatrix eigenspace(const ComplexMatrix& m, double mu, double tol,
                         const ToleranceConfig& cfg) {
    const auto eig = hermitian_eig(m, cfg);
    ComplexMatrix basis(m.rows(), 0);
    for (std::size_t k = 0; k < eig.eigenvalues.size(); ++k)
        if (std::abs(eig.eigenvalues[k] - mu) <= tol) basis = basis.hcat(eig.eigenvectors.col(k));
    return basis;
}

ComplexMatrix subspace_intersection(std::span<const ComplexMatrix> bases,
                                    const ToleranceConfig& cfg) {
    if (bases.empty()) throw DimensionMismatch("subspace_intersection: no bases given");
    const std::size_t d = bases[0].rows();
    for (const auto& q : bases)
        if (q.rows() != d) throw DimensionMismatch("subspace_intersection: row counts differ");

    ComplexMatrix s(d, d);
    for (const auto& q : bases) {
        s += ComplexMatrix::identity(d);
        if (q.cols() > 0) s -= q * q.adjoint();
    }
    const auto eig = hermitian_eig(s, cfg);
    const double thresh = static_cast<double>(bases.size()) * 1e-8;
    ComplexMatrix basis(d, 0);
    for (std::size_t k = 0; k < eig.eigenvalues.size(); ++k)
        if (eig.eigenvalues[k] <= thresh) basis = basis.hcat(eig.eigenvectors.col(k));
    return basis;
}

cplx determinant(ComplexMatrix m) {
    const std::size_t n = m.rows();
    if (n != m.cols()) throw ShapeMismatch("determinant: matrix not square");
    cplx det = 1.0;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        double best = std::abs(m(k, k));
        for (std::size_t i = k + 1; i < n; ++i)
            if (std::abs(m(i, k)) > best) {
                best = std::abs(m(i, k));
                piv = i;
            }
        if (best == 0.0) return 0.0;
        if (piv != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(piv, j));
            det = -det;
        }
        det *= m(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            const cplx f = m(i, k) / m(k, k);
            for (std::size_t j = k; j < n; ++j) m(i, j) -= f * m(k, j);
        }
    }
    return det;
}

}  // namespace orthokit
