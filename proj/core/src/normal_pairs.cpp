#include "orthokit/normal_pairs.hpp"

#include <cmath>
#include <numbers>

#include "orthokit/errors.hpp"
#include "orthokit/pythagoras.hpp"
#include "orthokit/rng.hpp"

namespace orthokit {

namespace {

ComplexMatrix real_part(const ComplexMatrix& m) {
    ComplexMatrix r = m + m.adjoint();
    r *= cplx{0.5, 0.0};
    return r;
}

ComplexMatrix imag_part(const ComplexMatrix& m) {
    ComplexMatrix r = m - m.adjoint();
    r *= cplx{0.0, -0.5};
    return r;
}

double offdiag_norm(const ComplexMatrix& m) {
    double s = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (i != j) s += std::norm(m(i, j));
    return std::sqrt(s);
}

/// Refines an orthonormal basis so each of the commuting Hermitian matrices
/// becomes diagonal: repeatedly diagonalize compressions on eigenvalue clusters.
ComplexMatrix simultaneous_basis(const std::vector<ComplexMatrix>& hs, std::size_t d,
                                 const ToleranceConfig& cfg) {
    ComplexMatrix u = ComplexMatrix::identity(d);
    std::vector<std::pair<std::size_t, std::size_t>> blocks{{0, d}};
    for (const auto& h : hs) {
        const double scale = std::max(h.frobenius_norm(), 1.0);
        std::vector<std::pair<std::size_t, std::size_t>> next;
        for (auto [lo, hi] : blocks) {
            const std::size_t k = hi - lo;
            if (k == 1) {
                next.emplace_back(lo, hi);
                continue;
            }
            ComplexMatrix q(d, k);
            for (std::size_t j = 0; j < k; ++j) q.set_col(j, u.col(lo + j));
            const auto eig = hermitian_eig(q.adjoint() * h * q, cfg);
            const ComplexMatrix qn = q * eig.eigenvectors;
            for (std::size_t j = 0; j < k; ++j) u.set_col(lo + j, qn.col(j));
            std::size_t start = 0;
            for (std::size_t j = 1; j <= k; ++j) {
                if (j == k ||
                    eig.eigenvalues[j] - eig.eigenvalues[j - 1] > 1e-7 * scale) {
                    next.emplace_back(lo + start, lo + j);
                    start = j;
                }
            }
        }
        blocks = std::move(next);
    }
    return u;
}

}  // namespace

JointSpectrum joint_spectrum(const ComplexMatrix& a, const ComplexMatrix& b,
                             const ToleranceConfig& cfg) {
    const std::size_t d = a.rows();
    if (a.cols() != d || b.rows() != d || b.cols() != d)
        throw ShapeMismatch("joint_spectrum: expects square matrices of equal size");
    const double na = std::max(operator_norm(a), 1e-300);
    const double nb = std::max(operator_norm(b), 1e-300);
    const double ntol = std::sqrt(cfg.abs_tol);
    if (operator_norm(a.adjoint() * a - a * a.adjoint()) > ntol * na * na ||
        operator_norm(b.adjoint() * b - b * b.adjoint()) > ntol * nb * nb)
        throw NotNormal("joint_spectrum: matrix not normal");
    if (operator_norm(a * b - b * a) > ntol * na * nb)
        throw NotCommuting("joint_spectrum: matrices do not commute");

    const std::vector<ComplexMatrix> hs{real_part(a), imag_part(a), real_part(b), imag_part(b)};

    // One Hermitian combination with a generic mixing constant usually splits
    // all degeneracies in a single shot.
    ComplexMatrix u;
    {
        const double kappa = 0.712;
        ComplexMatrix h = hs[0] + cplx{kappa, 0.0} * hs[1] + cplx{kappa * kappa, 0.0} * hs[2] +
                          cplx{kappa * kappa * kappa, 0.0} * hs[3];
        u = hermitian_eig(h, cfg).eigenvectors;
    }
    const double scale = std::max(na + nb, 1.0);
    if (offdiag_norm(u.adjoint() * a * u) > 1e-8 * scale ||
        offdiag_norm(u.adjoint() * b * u) > 1e-8 * scale) {
        u = simultaneous_basis(hs, d, cfg);
    }
    const ComplexMatrix da = u.adjoint() * a * u;
    const ComplexMatrix db = u.adjoint() * b * u;
    if (offdiag_norm(da) > 1e-6 * scale || offdiag_norm(db) > 1e-6 * scale)
        throw NotCommuting("joint_spectrum: simultaneous diagonalization failed");

    JointSpectrum out;
    out.diagonalizer = u;
    out.points.reserve(d);
    for (std::size_t i = 0; i < d; ++i) out.points.emplace_back(da(i, i), db(i, i));
    return out;
}

OrthoVerdict check_normal_pair(const ComplexMatrix& a, const ComplexMatrix& b,
                               const ToleranceConfig& cfg) {
    const NormalizedPair np = normalize_pair(a, b);
    const JointSpectrum js = joint_spectrum(np.a, np.b, cfg);

    // Polar reduction inside the generated abelian algebra: per joint point,
    // rotate the B-value onto the positive axis and counter-rotate the A-value.
    std::vector<std::pair<cplx, double>> pts;
    pts.reserve(js.points.size());
    for (const auto& [zeta, beta] : js.points) {
        const double t = std::abs(beta);
        const cplx phase = t > 1e-14 ? beta / t : cplx{1.0, 0.0};
        pts.emplace_back(std::conj(phase) * zeta, t);
    }

    OrthoVerdict v;
    const double tol = 1e-6;
    for (const auto& [zeta, t] : pts) {
        if (std::norm(zeta) + t * t > 1.0 + tol) {
            v.status = OrthoStatus::CertifiedNotOrthogonal;
            v.reason = VerdictReason::HalfBallViolation;
            v.witness_lambda = zeta;
            return v;
        }
    }

    // Hemisphere coverage gap via a Fibonacci lattice; positive gap refutes.
    const int n_lattice = 500;
    const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
    double gap = 0.0;
    cplx gap_zeta;
    for (int i = 0; i < n_lattice; ++i) {
        const double t = static_cast<double>(i) / (n_lattice - 1);
        const double r = std::sqrt(std::max(1.0 - t * t, 0.0));
        const cplx zeta{r * std::cos(golden * i), r * std::sin(golden * i)};
        double best = std::numeric_limits<double>::infinity();
        for (const auto& [pz, pt] : pts) {
            const double dz = std::abs(zeta - pz);
            const double dt = t - pt;
            best = std::min(best, std::sqrt(dz * dz + dt * dt));
        }
        if (best > gap) {
            gap = best;
            gap_zeta = zeta;
        }
    }
    if (gap > 0.1) {
        v.status = OrthoStatus::CertifiedNotOrthogonal;
        v.reason = VerdictReason::CoverageGapViolation;
        v.witness_lambda = gap_zeta;
        return v;
    }
    v.status = OrthoStatus::Inconclusive;
    v.reason = VerdictReason::None;
    return v;
}

ConeRefuterResult cone_refuter(const ComplexMatrix& a, const ComplexMatrix& b, int n_samples,
                               const ToleranceConfig& cfg) {
    const std::size_t d = a.cols();
    const ComplexMatrix ia = ComplexMatrix::identity(d) - a.adjoint() * a;
    const ComplexMatrix ib = ComplexMatrix::identity(d) - b.adjoint() * b;
    const ComplexMatrix ba = b.adjoint() * a;

    Rng rng(cfg.rng_seed);
    std::vector<ComplexMatrix> vecs;
    vecs.reserve(n_samples);
    for (int i = 0; i < n_samples; ++i) vecs.push_back(rng.unit_vector(d));

    auto vector_point = [&](const ComplexMatrix& xi) -> ConePoint {
        ConePoint p;
        p.x = inner(ia * xi, xi).real();
        p.y = inner(ib * xi, xi).real();
        p.z = inner(ba * xi, xi);
        return p;
    };

    ConeRefuterResult out;
    for (const auto& xi : vecs) out.points.push_back(vector_point(xi));
    // Pairwise midpoint mixtures of consecutive vector states.
    const std::size_t n_pure = out.points.size();
    for (std::size_t i = 0; i + 1 < n_pure; ++i) {
        ConePoint p;
        p.x = 0.5 * (out.points[i].x + out.points[i + 1].x);
        p.y = 0.5 * (out.points[i].y + out.points[i + 1].y);
        p.z = 0.5 * (out.points[i].z + out.points[i + 1].z);
        out.points.push_back(p);
    }

    const double tol = std::sqrt(cfg.abs_tol);
    for (std::size_t i = 0; i < out.points.size(); ++i) {
        const ConePoint& p = out.points[i];
        const bool inside = p.x >= -tol && p.x <= 1.0 + tol && p.y >= -tol && p.y <= 1.0 + tol &&
                            std::abs(p.z) <= std::sqrt(std::max(p.x, 0.0) * std::max(p.y, 0.0)) + tol;
        if (!inside) {
            out.refuted = true;
            out.witness_index = i;
            break;
        }
    }

    // Ray-coverage diagnostic: fraction of sampled ray directions passing near
    // some observed point.
    int hits = 0;
    const int n_rays = 64;
    for (int k = 0; k < n_rays; ++k) {
        const double s = 0.25 + 0.5 * (k % 8) / 7.0;
        const double t = 0.25 + 0.5 * (k / 8 % 8) / 7.0;
        const double w = 2.0 * std::numbers::pi * k / n_rays;
        const double dir[4] = {s, t, std::sqrt(s * t) * std::cos(w), std::sqrt(s * t) * std::sin(w)};
        const double dn2 = dir[0] * dir[0] + dir[1] * dir[1] + dir[2] * dir[2] + dir[3] * dir[3];
        for (const auto& p : out.points) {
            const double v4[4] = {p.x, p.y, p.z.real(), p.z.imag()};
            const double proj = (v4[0] * dir[0] + v4[1] * dir[1] + v4[2] * dir[2] + v4[3] * dir[3]) / dn2;
            if (proj <= 0.0) continue;
            double dist2 = 0.0;
            for (int c = 0; c < 4; ++c) {
                const double diff = v4[c] - proj * dir[c];
                dist2 += diff * diff;
            }
            if (dist2 < 0.01) {
                ++hits;
                break;
            }
        }
    }
    out.coverage_fraction = static_cast<double>(hits) / n_rays;
    return out;
}

}  // namespace orthokit
