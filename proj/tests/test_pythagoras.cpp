#include <doctest.h>

#include <cmath>

#include "orthokit/errors.hpp"
#include "orthokit/generators.hpp"
#include "orthokit/pythagoras.hpp"
#include "orthokit/rng.hpp"

using namespace orthokit;

TEST_CASE("default grid shape") {
    const GridSpec g = GridSpec::defaults();
    CHECK(g.points().size() == 32 * 64 + 5);
    CHECK(g.radii.front() == doctest::Approx(1e-3));
    CHECK(g.radii.back() == doctest::Approx(10.0));
}

TEST_CASE("normalize_pair") {
    const ComplexMatrix a = ComplexMatrix::from_rows({{2, 0}, {0, 0}});
    const NormalizedPair np = normalize_pair(a, a);
    CHECK(np.scale_a == doctest::Approx(2.0));
    CHECK(operator_norm(np.a) == doctest::Approx(1.0));
    CHECK_THROWS_AS(normalize_pair(ComplexMatrix::zero(2, 2), a), ZeroOperator);
}

TEST_CASE("canonical pair is flat and certified") {
    const MatrixPair p = canonical_pair();
    const DefectProfile prof = defect_profile(p.a, p.b, GridSpec::defaults());
    CHECK(prof.max_abs_defect < 1e-12);

    const OrthoVerdict v = check_pythagoras({p.a, p.b});
    CHECK(v.status == OrthoStatus::CertifiedOrthogonal);
    CHECK(v.reason == VerdictReason::CommonNormingState);
    REQUIRE(v.profile.has_value());
}

TEST_CASE("criterion matrix at lambda = 0") {
    const MatrixPair p = canonical_pair();
    const auto [m, min_eig] = criterion_matrix(p.a, p.b, cplx{0, 0});
    CHECK(min_eig == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(std::abs(m(0, 0)) < 1e-12);
    CHECK(std::abs(m(1, 1) - cplx{1.0, 0.0}) < 1e-12);
}

TEST_CASE("determinant identity test") {
    const MatrixPair p = canonical_pair();
    CHECK(det_identity_test(p.a, p.b).holds);

    const ComplexMatrix i2 = ComplexMatrix::identity(2);
    const DetIdentityResult r = det_identity_test(i2, i2);
    CHECK(!r.holds);
    CHECK(r.worst_abs_det > 1.0);
}

TEST_CASE("selfadjoint obstruction") {
    const ComplexMatrix d10 = ComplexMatrix::diagonal(std::vector<double>{1.0, 0.0});
    const ComplexMatrix d01 = ComplexMatrix::diagonal(std::vector<double>{0.0, 1.0});
    CHECK(selfadjoint_obstruction(d10, d01) == ObstructionResult::Refuted);
    const ComplexMatrix ind1 = ComplexMatrix::diagonal(std::vector<double>{1.0, -1.0});
    const ComplexMatrix ind2 = ComplexMatrix::diagonal(std::vector<double>{-1.0, 1.0});
    CHECK(selfadjoint_obstruction(ind1, ind2) == ObstructionResult::NotApplicable);
    CHECK(selfadjoint_obstruction(canonical_pair().a, d10) == ObstructionResult::NotApplicable);
}

TEST_CASE("norming vector refuter") {
    const ComplexMatrix b = ComplexMatrix::diagonal(std::vector<double>{1.0, 0.0});
    const auto bad = norming_orthogonality_test(ComplexMatrix::identity(2), b);
    REQUIRE(bad.has_value());
    CHECK(std::abs(inner(ComplexMatrix::identity(2) * *bad, *bad)) > 0.5);
    CHECK(!norming_orthogonality_test(canonical_pair().a, b).has_value());
}

TEST_CASE("common kernel search") {
    const ComplexMatrix a = ComplexMatrix::diagonal(std::vector<double>{0.0, 1.0, 2.0});
    const ComplexMatrix b = ComplexMatrix::diagonal(std::vector<double>{0.0, 3.0, 4.0});
    const auto xi = find_common_kernel(a, b);
    REQUIRE(xi.has_value());
    CHECK(vector_norm(a * *xi) < 1e-8);
    CHECK(vector_norm(b * *xi) < 1e-8);

    const ComplexMatrix c = ComplexMatrix::diagonal(std::vector<double>{1.0, 0.0, 2.0});
    CHECK(!find_common_kernel(a * cplx{1, 0} + ComplexMatrix::identity(3), c).has_value());
}

TEST_CASE("refuted pairs carry a witness") {
    const ComplexMatrix d10 = ComplexMatrix::diagonal(std::vector<double>{1.0, 0.0});
    const ComplexMatrix d01 = ComplexMatrix::diagonal(std::vector<double>{0.0, 1.0});
    const OrthoVerdict v = check_pythagoras({d10, d01});
    CHECK(v.status == OrthoStatus::CertifiedNotOrthogonal);
    CHECK(v.witness_lambda.has_value());
}

TEST_CASE("random pairs are refuted with a grid-sized defect") {
    Rng rng(17);
    const ComplexMatrix a = rng.gaussian(3, 3);
    const ComplexMatrix b = rng.gaussian(3, 3);
    const OrthoVerdict v = check_pythagoras({a, b});
    CHECK(v.status == OrthoStatus::CertifiedNotOrthogonal);
    REQUIRE(v.profile.has_value());
    CHECK(v.profile->max_abs_defect > 1e-3);
}

TEST_CASE("shape mismatch rejected") {
    CHECK_THROWS_AS(check_pythagoras({ComplexMatrix::zero(2, 2), ComplexMatrix::zero(3, 3)}),
                    ShapeMismatch);
}

TEST_CASE("reduce_to_positive preserves the defect profile") {
    Rng rng(18);
    const MatrixPair p = corner_pair(0.5, cplx{0.3, 0.1}, cplx{0.5, 0.0});
    const ComplexMatrix u = rng.unitary(3);
    const ComplexMatrix b_rot = u * p.b;
    auto [ared, bred] = reduce_to_positive(u * p.a, b_rot);
    CHECK(is_hermitian(bred, 1e-10));
    const GridSpec grid = GridSpec::defaults();
    const double before = defect_profile(p.a, p.b, grid).max_abs_defect;
    const double after = defect_profile(ared, bred, grid).max_abs_defect;
    CHECK(before < 1e-10);
    CHECK(after < 1e-8);
}
