#include "orthokit/selftest.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <ostream>
#include <sstream>

#include "orthokit/column_orth.hpp"
#include "orthokit/errors.hpp"
#include "orthokit/generators.hpp"
#include "orthokit/normal_pairs.hpp"
#include "orthokit/pythagoras.hpp"
#include "orthokit/range_orth.hpp"
#include "orthokit/rank1.hpp"
#include "orthokit/rng.hpp"

namespace orthokit {

namespace {

struct Check {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            if (detail.tellp() > 0) detail << "; ";
            detail << what;
        }
    }
    void note(const std::string& what) {
        if (detail.tellp() > 0) detail << "; ";
        detail << what;
    }
};

std::string fmt(double x) {
    std::ostringstream os;
    os.precision(3);
    os << x;
    return os.str();
}

// 1: the canonical 2x2 pair is orthogonal, certified exactly, with a flat
// defect profile on the full default grid.
void criterion_canonical(Check& c) {
    const MatrixPair p = canonical_pair();
    OrthoQuery q{p.a, p.b};
    c.require(q.grid.points().size() >= 2048, "default grid smaller than 2048 points");
    const OrthoVerdict v = check_pythagoras(q);
    c.require(v.status == OrthoStatus::CertifiedOrthogonal, "not certified orthogonal");
    c.require(v.reason == VerdictReason::CommonNormingState, "not certified via the state path");
    c.require(v.profile && v.profile->max_abs_defect <= 1e-10,
              "grid defect above 1e-10: " + fmt(v.profile ? v.profile->max_abs_defect : -1.0));
    const OrthoVerdict rv = rank1_certify(p.a, p.b);
    c.require(rv.status == OrthoStatus::CertifiedOrthogonal, "rank-1 path did not certify");
    if (c.pass && v.profile) c.note("max|defect| = " + fmt(v.profile->max_abs_defect));
}

// 2: the 3x3 corner family: determinant identity, closed-form criterion
// eigenvalues, flat grid; constraint-violating parameters are rejected by the
// generator and the corresponding matrices are refuted with a witness.
void criterion_corner(Check& c) {
    const double b = 0.5;
    const cplx alpha{0.5, 0.0}, beta{0.6, 0.0};
    const MatrixPair p = corner_pair(b, alpha, beta);

    c.require(det_identity_test(p.a, p.b).holds, "determinant identity fails");

    double worst_eig_err = 0.0;
    for (int i = 0; i < 100; ++i) {
        const double r = 0.25 * std::pow(2.0, i % 5);
        const double th = 2.0 * 3.14159265358979323846 * (i / 5) / 20.0;
        const cplx lam{r * std::cos(th), r * std::sin(th)};
        const auto [m, min_eig] = criterion_matrix(p.a, p.b, lam);
        auto eig = hermitian_eig(m);
        const double ql = (1.0 - b * b) * std::norm(lam) -
                          2.0 * (std::conj(alpha) * b * lam).real() + 1.0 - std::norm(alpha) -
                          std::norm(beta);
        std::array<double, 3> expected{0.0, ql, 1.0 + std::norm(lam)};
        std::sort(expected.begin(), expected.end());
        for (int k = 0; k < 3; ++k)
            worst_eig_err = std::max(worst_eig_err, std::abs(eig.eigenvalues[k] - expected[k]));
    }
    c.require(worst_eig_err <= 1e-8, "criterion eigenvalue mismatch: " + fmt(worst_eig_err));

    const DefectProfile prof = defect_profile(p.a, p.b, GridSpec::defaults());
    c.require(prof.max_abs_defect <= 1e-8, "grid defect above 1e-8: " + fmt(prof.max_abs_defect));

    bool rejected = false;
    try {
        corner_pair(0.5, cplx{0.8, 0.0}, cplx{0.6, 0.0});
    } catch (const ParamConstraintViolated&) {
        rejected = true;
    }
    c.require(rejected, "violating parameters not rejected");

    ComplexMatrix a_bad(3, 3);
    a_bad(0, 2) = 1.0;
    a_bad(1, 1) = 0.8;
    a_bad(2, 1) = 0.6;
    const ComplexMatrix b_bad = ComplexMatrix::diagonal(std::vector<double>{1.0, 0.5, 0.0});
    const OrthoVerdict v = check_pythagoras({a_bad, b_bad});
    c.require(v.status == OrthoStatus::CertifiedNotOrthogonal, "violating pair not refuted");
    c.require(v.witness_lambda.has_value(), "refutation carries no witness lambda");
    if (c.pass) c.note("eig err " + fmt(worst_eig_err) + ", defect " + fmt(prof.max_abs_defect));
}

// 3: twenty seeded draws of the 3x2 trigonometric family stay flat on the grid.
void criterion_trig(Check& c) {
    Rng rng(3);
    const GridSpec grid = GridSpec::defaults();
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
        const double phi = rng.uniform(0.0, 6.283185307179586);
        const double psi = rng.uniform(0.0, 6.283185307179586);
        auto phase = [&] {
            const double t = rng.uniform(0.0, 6.283185307179586);
            return cplx{std::cos(t), std::sin(t)};
        };
        const MatrixPair p = trig_pair(phi, psi, phase(), phase(), phase());
        const NormalizedPair np = normalize_pair(p.a, p.b);
        worst = std::max(worst, defect_profile(np.a, np.b, grid).max_abs_defect);
    }
    c.require(worst <= 1e-8, "grid defect above 1e-8: " + fmt(worst));
    if (c.pass) c.note("worst defect " + fmt(worst));
}

// 4: commuting normal pairs are never orthogonal; each verdict is confirmed
// by an explicit grid defect.
void criterion_normal(Check& c) {
    Rng rng(4);
    const GridSpec grid = GridSpec::defaults();
    double min_confirm = std::numeric_limits<double>::infinity();
    for (int i = 0; i < 100 && c.pass; ++i) {
        const std::size_t d = 2 + i % 5;
        std::vector<cplx> da(d), db(d);
        for (auto& z : da) z = rng.cgauss();
        for (auto& z : db) z = rng.cgauss();
        const ComplexMatrix u = rng.unitary(d);
        const ComplexMatrix a = u.adjoint() * ComplexMatrix::diagonal(da) * u;
        const ComplexMatrix b = u.adjoint() * ComplexMatrix::diagonal(db) * u;
        const OrthoVerdict v = check_normal_pair(a, b);
        c.require(v.status == OrthoStatus::CertifiedNotOrthogonal,
                  "pair " + std::to_string(i) + " not refuted");
        const NormalizedPair np = normalize_pair(a, b);
        const double defect = defect_profile(np.a, np.b, grid).max_abs_defect;
        c.require(defect > 1e-6, "pair " + std::to_string(i) + " lacks grid confirmation");
        min_confirm = std::min(min_confirm, defect);
    }
    if (c.pass) c.note("min confirming defect " + fmt(min_confirm));
}

// 5: canonical column families certify yes with a flat coefficient identity;
// {diag(1,0), diag(0,1)} certifies no with a large scalar-coefficient violation.
void criterion_column(Check& c) {
    double worst = 0.0;
    for (std::size_t d = 1; d <= 5 && c.pass; ++d)
        for (std::size_t k = 1; k <= d; ++k) {
            ColumnFamily fam{column_canonical(k, d), {}};
            const ColumnReport rep = check_column_orthonormal(fam);
            c.require(rep.status == OrthoStatus::CertifiedOrthogonal,
                      "canonical family (" + std::to_string(k) + "," + std::to_string(d) +
                          ") not certified");
            for (std::size_t n = 1; n <= 3; ++n) {
                const CoefficientIdentityResult r = coefficient_identity_test(fam, n, 100);
                worst = std::max(worst, r.worst_rel_err);
            }
        }
    c.require(worst <= 1e-8, "identity error above 1e-8: " + fmt(worst));

    ColumnFamily diag_fam;
    diag_fam.members = {ComplexMatrix::diagonal(std::vector<double>{1.0, 0.0}),
                        ComplexMatrix::diagonal(std::vector<double>{0.0, 1.0})};
    const ColumnReport rep = check_column_orthonormal(diag_fam);
    c.require(rep.status == OrthoStatus::CertifiedNotOrthogonal,
              "diagonal pair wrongly certified");
    const CoefficientIdentityResult r = coefficient_identity_test(diag_fam, 1, 100);
    c.require(r.worst_rel_err >= 0.49,
              "diagonal pair violation too small: " + fmt(r.worst_rel_err));
    if (c.pass) c.note("family err " + fmt(worst) + ", refuter err " + fmt(r.worst_rel_err));
}

// 6: majorization decides |BX| <= |AX|: positive-part witnesses when it
// fails, uniform random-trial slack when it holds.
void criterion_majorization(Check& c) {
    Rng rng(6);
    double min_gap = std::numeric_limits<double>::infinity();
    for (int i = 0; i < 100 && c.pass; ++i) {
        const std::size_t d = 3 + i % 3;
        ComplexMatrix a, b;
        for (int guard = 0;; ++guard) {
            a = rng.gaussian(d, d);
            b = rng.gaussian(d, d);
            const auto eig = hermitian_eig(a.adjoint() * a - b.adjoint() * b);
            const double scale = std::max(1.0, a.frobenius_norm() + b.frobenius_norm());
            if (eig.eigenvalues.front() < -1e-6 * scale) break;
            if (guard > 50) break;
        }
        const MajorizationResult r = majorization_test(a, b, 0);
        c.require(!r.dominated, "pair " + std::to_string(i) + " unexpectedly dominated");
        c.require(r.witness && r.witness_gap > 1e-6,
                  "pair " + std::to_string(i) + " has no witness above 1e-6");
        min_gap = std::min(min_gap, r.witness_gap);
    }

    double worst_slack = std::numeric_limits<double>::infinity();
    for (int i = 0; i < 100 && c.pass; ++i) {
        const std::size_t d = 3 + i % 3;
        const ComplexMatrix b = rng.gaussian(d, d);
        const ComplexMatrix extra = rng.gaussian(d, d);
        const ComplexMatrix a =
            psd_sqrt(b.adjoint() * b + extra.adjoint() * extra * cplx{0.1, 0.0});
        const MajorizationResult r = majorization_test(a, b, 0);
        c.require(r.dominated, "constructed pair " + std::to_string(i) + " not dominated");
        for (int t = 0; t < 1000; ++t) {
            const ComplexMatrix x = rng.gaussian(d, d);
            const double slack = operator_norm(a * x) - operator_norm(b * x);
            worst_slack = std::min(worst_slack, slack);
            if (slack < -1e-10) break;
        }
    }
    c.require(worst_slack >= -1e-10, "dominated slack below -1e-10: " + fmt(worst_slack));
    if (c.pass) c.note("min gap " + fmt(min_gap) + ", worst slack " + fmt(worst_slack));
}

// 7: range-orthogonal pairs satisfy |AX| <= |AX + BY| on every sampled pair;
// the state certificate refutes diag(1,0) vs diag(0,1) and the grid confirms.
void criterion_metric(Check& c) {
    Rng rng(7);
    double worst = std::numeric_limits<double>::infinity();
    for (int i = 0; i < 50 && c.pass; ++i) {
        const std::size_t d = 4;
        const ComplexMatrix u = rng.unitary(d);
        ComplexMatrix left(d, 2), right(d, 2);
        for (std::size_t j = 0; j < 2; ++j) {
            left.set_col(j, u.col(j));
            right.set_col(j, u.col(2 + j));
        }
        RangeOrthQuery q;
        q.a = left * rng.gaussian(2, d);
        q.b = right * rng.gaussian(2, d);
        q.trials = 1000;
        q.cfg.rng_seed = rng.integer();
        const MetricInequalityResult r = metric_inequality_test(q);
        c.require(r.all_hold && r.worst_slack >= -1e-10,
                  "pair " + std::to_string(i) + " slack " + fmt(r.worst_slack));
        worst = std::min(worst, r.worst_slack);
    }

    const ComplexMatrix a = ComplexMatrix::diagonal(std::vector<double>{1.0, 0.0});
    const ComplexMatrix b = ComplexMatrix::diagonal(std::vector<double>{0.0, 1.0});
    const OrthoVerdict sv = pythagoras_via_state(a, b);
    c.require(sv.status == OrthoStatus::CertifiedNotOrthogonal &&
                  sv.reason == VerdictReason::NoCommonNormingState,
              "state certificate failed to refute the diagonal pair");
    const double defect = defect_profile(a, b, GridSpec::defaults()).max_abs_defect;
    c.require(defect > 1e-6, "no grid confirmation for the diagonal pair");
    if (c.pass) c.note("worst slack " + fmt(worst) + ", diag defect " + fmt(defect));
}

// 8: the partial-isometry family satisfies the isometry identity both
// algebraically and on random draws; scaling one member breaks both.
void criterion_isometry(Check& c) {
    const MatrixPair p = partial_isometry_pair(4, 8);
    const ComplexMatrix target = p.a.adjoint() * p.a;
    IsometryFamilyQuery q;
    q.members = {p.a, p.b};
    q.targets = {target, target};
    q.trials = 100;
    const IsometryIdentityResult good = check_isometry_identity(q);
    c.require(good.algebraic, "algebraic flags fail on the clean family");
    c.require(good.consistent, "random draws fail on the clean family");

    q.members[0] = p.a * cplx{0.9, 0.0};
    const IsometryIdentityResult bad = check_isometry_identity(q);
    c.require(!bad.algebraic && !bad.consistent, "perturbed family not rejected by both flags");
    if (c.pass)
        c.note("clean err " + fmt(good.worst_rel_err) + ", perturbed err " +
               fmt(bad.worst_rel_err));
}

// 9: against a rank-1 projection, the recursive block certificate agrees with
// the grid oracle on random instances; both closed-form families certify,
// transposes included.
void criterion_rank1(Check& c) {
    Rng rng(9);
    const GridSpec grid = GridSpec::defaults();
    for (int i = 0; i < 200 && c.pass; ++i) {
        const std::size_t d = (i < 100) ? 3 : 4;
        const ComplexMatrix a = rng.gaussian(d, d);
        ComplexMatrix b(d, d);
        b(0, 0) = 1.0;
        const OrthoVerdict v = rank1_certify(a, b);
        const NormalizedPair np = normalize_pair(a, b);
        const double defect = defect_profile(np.a, np.b, grid).max_abs_defect;
        if (v.status == OrthoStatus::CertifiedOrthogonal)
            c.require(defect <= 1e-8, "instance " + std::to_string(i) +
                                          " certified but grid defect " + fmt(defect));
        else
            c.require(defect > 1e-6, "instance " + std::to_string(i) +
                                         " refuted but grid defect only " + fmt(defect));
    }

    const std::array<MatrixPair, 4> families{
        rank1_column_pair(cplx{0.6, 0.0}, cplx{0.8, 0.0}, false),
        rank1_column_pair(cplx{0.6, 0.0}, cplx{0.8, 0.0}, true),
        rank1_diagonal_pair(cplx{0.8, 0.0}, 0.6, cplx{0.6, 0.0}, false),
        rank1_diagonal_pair(cplx{0.8, 0.0}, 0.6, cplx{0.6, 0.0}, true),
    };
    for (std::size_t i = 0; i < families.size(); ++i) {
        const OrthoVerdict v = rank1_certify(families[i].a, families[i].b);
        c.require(v.status == OrthoStatus::CertifiedOrthogonal,
                  "closed-form family " + std::to_string(i) + " not certified");
        const NormalizedPair np = normalize_pair(families[i].a, families[i].b);
        const double defect = defect_profile(np.a, np.b, grid).max_abs_defect;
        c.require(defect <= 1e-8, "closed-form family " + std::to_string(i) +
                                      " grid defect " + fmt(defect));
    }
}

// 10: eigensolver accuracy and the subspace-intersection rank oracle.
void criterion_linalg(Check& c) {
    Rng rng(10);
    double worst_res = 0.0, worst_orth = 0.0;
    for (int i = 0; i < 100 && c.pass; ++i) {
        const std::size_t n = 2 + rng.integer() % 49;
        const ComplexMatrix g = rng.gaussian(n, n);
        ComplexMatrix m = g + g.adjoint();
        const auto eig = hermitian_eig(m);
        const ComplexMatrix lam =
            ComplexMatrix::diagonal(std::span<const double>(eig.eigenvalues));
        const double res = (m * eig.eigenvectors - eig.eigenvectors * lam).frobenius_norm();
        const double scale = std::max(m.frobenius_norm(), 1e-300);
        worst_res = std::max(worst_res, res / scale);
        const double orth =
            (eig.eigenvectors.adjoint() * eig.eigenvectors - ComplexMatrix::identity(n))
                .frobenius_norm();
        worst_orth = std::max(worst_orth, orth);
    }
    c.require(worst_res <= 1e-9, "eigen residual above 1e-9: " + fmt(worst_res));
    c.require(worst_orth <= 1e-10, "orthonormality above 1e-10: " + fmt(worst_orth));

    for (int i = 0; i < 100 && c.pass; ++i) {
        const std::size_t d = 6;
        const std::size_t common = i % 3;
        const std::size_t extra1 = 1 + i % 2;
        const std::size_t extra2 = 1 + (i / 2) % 2;
        const ComplexMatrix u = rng.unitary(d);
        ComplexMatrix q1(d, common + extra1), q2(d, common + extra2);
        for (std::size_t j = 0; j < common; ++j) {
            q1.set_col(j, u.col(j));
            q2.set_col(j, u.col(j));
        }
        for (std::size_t j = 0; j < extra1; ++j) q1.set_col(common + j, u.col(common + j));
        for (std::size_t j = 0; j < extra2; ++j)
            q2.set_col(common + j, u.col(common + extra1 + j));
        const std::array<ComplexMatrix, 2> bases{q1, q2};
        const std::size_t got = subspace_intersection(bases).cols();

        // Brute-force oracle: dim(S1) + dim(S2) - rank([Q1 Q2]).
        const ComplexMatrix stacked = q1.hcat(q2);
        const auto gram = hermitian_eig(stacked.adjoint() * stacked);
        std::size_t rank = 0;
        for (double v : gram.eigenvalues)
            if (v > 1e-8) ++rank;
        const std::size_t oracle = q1.cols() + q2.cols() - rank;
        c.require(got == oracle && got == common,
                  "instance " + std::to_string(i) + ": got " + std::to_string(got) +
                      ", oracle " + std::to_string(oracle) + ", planted " +
                      std::to_string(common));
    }
    if (c.pass) c.note("res " + fmt(worst_res) + ", orth " + fmt(worst_orth));
}

// 11: the decision is invariant under scalar scaling, a phase, simultaneous
// unitary multiplication, transpose and adjoint.
void criterion_invariance(Check& c) {
    Rng rng(11);
    for (int i = 0; i < 50 && c.pass; ++i) {
        MatrixPair p;
        switch (i % 10) {
            case 0: p = canonical_pair(); break;
            case 1: p = partial_isometry_pair(4, 100 + i); break;
            case 2: p = corner_pair(0.5, cplx{0.3, 0.2}, cplx{0.5, 0.0}); break;
            case 3: p = rank1_column_pair(cplx{0.0, 0.6}, cplx{0.8, 0.0}, false); break;
            case 4:
                p = trig_pair(rng.uniform(0.2, 1.4), rng.uniform(0.2, 1.4), cplx{1, 0},
                              cplx{0, 1}, cplx{1, 0});
                break;
            case 5:
                p.a = ComplexMatrix::diagonal(std::vector<double>{1.0, 0.0});
                p.b = ComplexMatrix::diagonal(std::vector<double>{0.0, 1.0});
                break;
            default: {
                const std::size_t d = 2 + i % 3;
                p.a = rng.gaussian(d, d);
                p.b = rng.gaussian(d, d);
                break;
            }
        }
        const OrthoStatus base = check_pythagoras({p.a, p.b}).status;
        const ComplexMatrix u = rng.unitary(p.a.rows());
        const std::array<MatrixPair, 5> variants{
            MatrixPair{p.a * cplx{2.0, 0.0}, p.b * cplx{0.5, 0.0}},
            MatrixPair{p.a * cplx{0.0, 1.0}, p.b},
            MatrixPair{u * p.a, u * p.b},
            MatrixPair{p.a.transpose(), p.b.transpose()},
            MatrixPair{p.a.adjoint(), p.b.adjoint()},
        };
        for (std::size_t k = 0; k < variants.size(); ++k) {
            const OrthoStatus got = check_pythagoras({variants[k].a, variants[k].b}).status;
            c.require(got == base, "pair " + std::to_string(i) + " variant " +
                                       std::to_string(k) + " changed status");
        }
    }
}

CriterionResult run_one(int id, const std::string& name, double budget_s,
                        void (*fn)(Check&)) {
    CriterionResult r;
    r.id = id;
    r.name = name;
    Check c;
    const auto start = std::chrono::steady_clock::now();
    try {
        fn(c);
    } catch (const std::exception& e) {
        c.require(false, std::string("exception: ") + e.what());
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    c.require(r.seconds < budget_s,
              "runtime " + fmt(r.seconds) + "s exceeds " + fmt(budget_s) + "s");
    r.pass = c.pass;
    r.detail = c.detail.str();
    return r;
}

}  // namespace

std::vector<CriterionResult> run_acceptance() {
    std::vector<CriterionResult> out;
    out.push_back(run_one(1, "canonical-pair-certificate", 1.0, criterion_canonical));
    out.push_back(run_one(2, "corner-family-det-and-eigenvalues", 5.0, criterion_corner));
    out.push_back(run_one(3, "trig-family-grid", 10.0, criterion_trig));
    out.push_back(run_one(4, "commuting-normal-refutation", 10.0, criterion_normal));
    out.push_back(run_one(5, "column-orthonormality", 10.0, criterion_column));
    out.push_back(run_one(6, "majorization-witness", 20.0, criterion_majorization));
    out.push_back(run_one(7, "metric-inequality", 30.0, criterion_metric));
    out.push_back(run_one(8, "isometry-family-identity", 5.0, criterion_isometry));
    out.push_back(run_one(9, "rank1-certificate-vs-grid", 60.0, criterion_rank1));
    out.push_back(run_one(10, "linalg-accuracy", 30.0, criterion_linalg));
    out.push_back(run_one(11, "verdict-invariance", 30.0, criterion_invariance));
    return out;
}

int print_acceptance(std::ostream& os) {
    const auto results = run_acceptance();
    bool all = true;
    for (const auto& r : results) {
        os << (r.pass ? "[PASS] " : "[FAIL] ") << r.id << " " << r.name << " ("
           << static_cast<int>(r.seconds * 1000.0) << " ms)";
        if (!r.detail.empty()) os << ": " << r.detail;
        os << "\n";
        all = all && r.pass;
    }
    return all ? 0 : 1;
}

}  // namespace orthokit
