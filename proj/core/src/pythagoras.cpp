#include "orthokit/pythagoras.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include "orthokit/errors.hpp"
#include "orthokit/range_orth.hpp"
#include "orthokit/rank1.hpp"
#include "orthokit/rng.hpp"

namespace orthokit {

GridSpec GridSpec::defaults() {
    GridSpec g;
    const int n = 32;
    const double lo = std::log(1e-3), hi = std::log(10.0);
    g.radii.reserve(n);
    for (int i = 0; i < n; ++i) g.radii.push_back(std::exp(lo + (hi - lo) * i / (n - 1)));
    return g;
}

std::vector<cplx> GridSpec::points() const {
    std::vector<cplx> pts;
    pts.reserve(radii.size() * angles_per_radius + extra_points.size());
    for (double r : radii)
        for (int k = 0; k < angles_per_radius; ++k) {
            const double th = 2.0 * std::numbers::pi * k / angles_per_radius;
            pts.push_back(cplx{r * std::cos(th), r * std::sin(th)});
        }
    for (cplx z : extra_points) pts.push_back(z);
    return pts;
}

NormalizedPair normalize_pair(const ComplexMatrix& a, const ComplexMatrix& b) {
    NormalizedPair out;
    out.scale_a = operator_norm(a);
    out.scale_b = operator_norm(b);
    if (out.scale_a <= 0.0 || out.scale_b <= 0.0)
        throw ZeroOperator("normalize_pair: zero operator");
    out.a = a * cplx{1.0 / out.scale_a, 0.0};
    out.b = b * cplx{1.0 / out.scale_b, 0.0};
    return out;
}

std::pair<ComplexMatrix, ComplexMatrix> reduce_to_positive(const ComplexMatrix& a,
                                                           const ComplexMatrix& b,
                                                           const ToleranceConfig& cfg) {
    if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows())
        throw ShapeMismatch("reduce_to_positive: expects square matrices of equal size");
    auto [u, p] = polar_unitary(b, cfg);
    return {u.adjoint() * a, std::move(p)};
}

std::pair<ComplexMatrix, double> criterion_matrix(const ComplexMatrix& a, const ComplexMatrix& b,
                                                  cplx lambda, const ToleranceConfig& cfg) {
    const ComplexMatrix s = a + lambda * b;
    ComplexMatrix m = ComplexMatrix::identity(a.cols()) * cplx{1.0 + std::norm(lambda), 0.0} -
                      s.adjoint() * s;
    const auto eig = hermitian_eig(m, cfg);
    return {std::move(m), eig.eigenvalues.front()};
}

DefectProfile defect_profile(const ComplexMatrix& a, const ComplexMatrix& b,
                             const GridSpec& grid) {
    DefectProfile prof;
    prof.min_defect = std::numeric_limits<double>::infinity();
    double worst_abs = -1.0;
    for (cplx lambda : grid.points()) {
        const double nrm = operator_norm(a + lambda * b);
        const double defect = 1.0 + std::norm(lambda) - nrm * nrm;
        prof.samples.push_back({lambda, defect});
        if (defect < prof.min_defect) {
            prof.min_defect = defect;
            prof.argmin_lambda = lambda;
        }
        if (std::abs(defect) > worst_abs) {
            worst_abs = std::abs(defect);
            prof.max_abs_defect = std::abs(defect);
        }
    }
    return prof;
}

DetIdentityResult det_identity_test(const ComplexMatrix& a, const ComplexMatrix& b,
                                    const ToleranceConfig& cfg) {
    if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows())
        throw ShapeMismatch("det_identity_test: expects square matrices of equal size");
    const std::size_t n = a.rows();
    const std::size_t nodes = n + 1;
    DetIdentityResult out;
    std::vector<cplx> p(nodes);
    for (std::size_t k = 0; k < nodes; ++k) {
        const double th = 2.0 * std::numbers::pi * k / nodes;
        const cplx lam{std::cos(th), std::sin(th)};
        p[k] = determinant(a + lam * b);
        if (std::abs(p[k]) > out.worst_abs_det) {
            out.worst_abs_det = std::abs(p[k]);
            out.worst_node = lam;
        }
    }
    // Unit-circle nodes: coefficients by inverse DFT.
    out.coefficients.resize(nodes);
    for (std::size_t m = 0; m < nodes; ++m) {
        cplx c = 0.0;
        for (std::size_t k = 0; k < nodes; ++k) {
            const double th = -2.0 * std::numbers::pi * static_cast<double>(k * m) / nodes;
            c += p[k] * cplx{std::cos(th), std::sin(th)};
        }
        out.coefficients[m] = c / static_cast<double>(nodes);
    }
    const double scale = std::max(1.0, out.worst_abs_det);
    out.holds = true;
    for (const cplx& c : out.coefficients)
        if (std::abs(c) > cfg.rel_tol * scale) out.holds = false;
    return out;
}

std::optional<ComplexMatrix> norming_orthogonality_test(const ComplexMatrix& a,
                                                        const ComplexMatrix& b,
                                                        const ToleranceConfig& cfg) {
    const double tol = std::sqrt(cfg.abs_tol);
    const ComplexMatrix e = eigenspace(b, 1.0, cfg.rel_tol, cfg);
    if (e.cols() == 0) return std::nullopt;
    auto probe = [&](const ComplexMatrix& xi) -> bool {
        return std::abs(inner(a * xi, xi)) > tol;
    };
    for (std::size_t k = 0; k < e.cols(); ++k) {
        const ComplexMatrix xi = e.col(k);
        if (probe(xi)) return xi;
    }
    Rng rng(cfg.rng_seed);
    for (int trial = 0; trial < 16; ++trial) {
        ComplexMatrix xi = e * rng.gaussian(e.cols(), 1);
        const double nrm = vector_norm(xi);
        if (nrm < 1e-8) continue;
        xi *= cplx{1.0 / nrm, 0.0};
        if (probe(xi)) return xi;
    }
    return std::nullopt;
}

ObstructionResult selfadjoint_obstruction(const ComplexMatrix& a, const ComplexMatrix& b,
                                          const ToleranceConfig& cfg) {
    if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows())
        return ObstructionResult::NotApplicable;
    const double sa = std::max(a.frobenius_norm(), 1e-300);
    const double sb = std::max(b.frobenius_norm(), 1e-300);
    if (a.frobenius_norm() == 0.0 || b.frobenius_norm() == 0.0)
        return ObstructionResult::NotApplicable;
    if (!is_hermitian(a, cfg.rel_tol * sa) || !is_hermitian(b, cfg.rel_tol * sb))
        return ObstructionResult::NotApplicable;
    const auto ea = hermitian_eig(a, cfg);
    const auto eb = hermitian_eig(b, cfg);
    const bool a_psd = ea.eigenvalues.front() >= -cfg.rel_tol * sa;
    const bool b_psd = eb.eigenvalues.front() >= -cfg.rel_tol * sb;
    return (a_psd || b_psd) ? ObstructionResult::Refuted : ObstructionResult::NotApplicable;
}

std::optional<ComplexMatrix> find_common_kernel(const ComplexMatrix& a, const ComplexMatrix& b,
                                                const ToleranceConfig& cfg) {
    const double sa = std::max(operator_norm(a), 1e-300);
    const double sb = std::max(operator_norm(b), 1e-300);
    const ComplexMatrix ka = eigenspace(a, 0.0, std::sqrt(cfg.abs_tol) * sa, cfg);
    const ComplexMatrix kb = eigenspace(b, 0.0, std::sqrt(cfg.abs_tol) * sb, cfg);
    if (ka.cols() == 0 || kb.cols() == 0) return std::nullopt;
    const std::array<ComplexMatrix, 2> bases{ka, kb};
    const ComplexMatrix common = subspace_intersection(bases, cfg);
    if (common.cols() == 0) return std::nullopt;
    const ComplexMatrix xi = common.col(0);
    if (vector_norm(a * xi) > std::sqrt(cfg.abs_tol) * sa ||
        vector_norm(b * xi) > std::sqrt(cfg.abs_tol) * sb)
        return std::nullopt;
    return xi;
}

namespace {

struct Evidence {
    bool refuted = false;
    VerdictReason refute_reason = VerdictReason::None;
    std::optional<cplx> refute_lambda;
    std::optional<ComplexMatrix> refute_vector;
    bool certified = false;
    VerdictReason cert_reason = VerdictReason::None;
};

bool is_rank1_projection(const ComplexMatrix& p, const ToleranceConfig& cfg) {
    const double tol = std::sqrt(cfg.abs_tol);
    return p.rows() == p.cols() && is_hermitian(p, tol) &&
           operator_norm(p * p - p) <= tol && std::abs(p.trace() - cplx{1.0, 0.0}) <= tol;
}

void evaluate_variant(const ComplexMatrix& a, const ComplexMatrix& b, const ToleranceConfig& cfg,
                      Evidence& ev) {
    const bool square = a.rows() == a.cols();

    ComplexMatrix ared = a, bred = b;
    if (square) {
        auto [a2, p] = reduce_to_positive(a, b, cfg);
        ared = std::move(a2);
        bred = std::move(p);

        if (!ev.refuted &&
            (selfadjoint_obstruction(a, b, cfg) == ObstructionResult::Refuted ||
             selfadjoint_obstruction(ared, bred, cfg) == ObstructionResult::Refuted)) {
            ev.refuted = true;
            ev.refute_reason = VerdictReason::SelfadjointPositivePair;
        }

        const DetIdentityResult det = det_identity_test(a, b, cfg);
        if (!det.holds && !ev.refuted) {
            ev.refuted = true;
            ev.refute_reason = VerdictReason::DetIdentityViolation;
            ev.refute_lambda = det.worst_node;
        }

        if (const auto xi = norming_orthogonality_test(ared, bred, cfg); xi && !ev.refuted) {
            ev.refuted = true;
            ev.refute_reason = VerdictReason::NormingVectorViolation;
            ev.refute_vector = *xi;
        }
    }

    // Certificate paths; a failed certificate is itself a sound refutation.
    const double cross = operator_norm(a.adjoint() * b);
    if (cross <= std::sqrt(cfg.abs_tol)) {
        const OrthoVerdict sv = pythagoras_via_state(a, b, cfg);
        if (sv.status == OrthoStatus::CertifiedOrthogonal) {
            if (!ev.certified) {
                ev.certified = true;
                ev.cert_reason = sv.reason;
            }
        } else if (!ev.refuted) {
            ev.refuted = true;
            ev.refute_reason = sv.reason;
        }
    }
    if (square && is_rank1_projection(bred, cfg)) {
        const OrthoVerdict rv = rank1_certify(ared, bred, cfg);
        if (rv.status == OrthoStatus::CertifiedOrthogonal) {
            if (!ev.certified) {
                ev.certified = true;
                ev.cert_reason = rv.reason;
            }
        } else if (!ev.refuted) {
            ev.refuted = true;
            ev.refute_reason = rv.reason;
        }
    }
}

}  // namespace

OrthoVerdict check_pythagoras(const OrthoQuery& q) {
    if (q.a.rows() != q.b.rows() || q.a.cols() != q.b.cols())
        throw ShapeMismatch("check_pythagoras: operand shapes differ");
    const NormalizedPair np = normalize_pair(q.a, q.b);
    const ToleranceConfig& cfg = q.cfg;

    DefectProfile prof = defect_profile(np.a, np.b, q.grid);
    const double grid_tol = std::max(10.0 * cfg.rel_tol, cfg.abs_tol);
    const bool grid_violation = prof.max_abs_defect > grid_tol;
    cplx worst_lambda = prof.argmin_lambda;
    {
        double worst = -1.0;
        for (const auto& s : prof.samples)
            if (std::abs(s.defect) > worst) {
                worst = std::abs(s.defect);
                worst_lambda = s.lambda;
            }
    }

    // Orthogonality is invariant under transpose, adjoint and conjugation;
    // running every stage on all four variants keeps the verdict invariant too.
    Evidence ev;
    evaluate_variant(np.a, np.b, cfg, ev);
    evaluate_variant(np.a.adjoint(), np.b.adjoint(), cfg, ev);
    evaluate_variant(np.a.transpose(), np.b.transpose(), cfg, ev);
    evaluate_variant(np.a.conjugate(), np.b.conjugate(), cfg, ev);

    OrthoVerdict v;
    v.profile = std::move(prof);
    if (ev.refuted && ev.certified) {
        v.status = OrthoStatus::Inconclusive;
        v.reason = VerdictReason::Contradiction;
        return v;
    }
    if (ev.refuted) {
        v.status = OrthoStatus::CertifiedNotOrthogonal;
        v.reason = ev.refute_reason;
        v.witness_lambda = ev.refute_lambda ? ev.refute_lambda : std::optional<cplx>{worst_lambda};
        v.witness_vector = ev.refute_vector;
        return v;
    }
    if (ev.certified) {
        if (grid_violation) {
            v.status = OrthoStatus::Inconclusive;
            v.reason = VerdictReason::Contradiction;
            v.witness_lambda = worst_lambda;
        } else {
            v.status = OrthoStatus::CertifiedOrthogonal;
            v.reason = ev.cert_reason;
        }
        return v;
    }
    if (grid_violation) {
        v.status = OrthoStatus::CertifiedNotOrthogonal;
        v.reason = VerdictReason::GridDefectViolation;
        v.witness_lambda = worst_lambda;
        return v;
    }
    v.status = OrthoStatus::ConsistentAtTolerance;
    v.reason = VerdictReason::GridConsistent;
    return v;
}

}  // namespace orthokit
