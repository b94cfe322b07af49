#include <doctest.h>

#include <cmath>

#include "orthokit/errors.hpp"
#include "orthokit/generators.hpp"
#include "orthokit/range_orth.hpp"
#include "orthokit/rng.hpp"

using namespace orthokit;

TEST_CASE("range orthogonality flag") {
    const MatrixPair p = canonical_pair();
    CHECK(check_range_orthogonal(p.a, p.b));
    CHECK(!check_range_orthogonal(ComplexMatrix::identity(2), ComplexMatrix::identity(2)));
}

TEST_CASE("metric inequality holds for range-orthogonal pairs") {
    const MatrixPair p = canonical_pair();
    RangeOrthQuery q{p.a, p.b, 200, {}};
    const MetricInequalityResult r = metric_inequality_test(q);
    CHECK(r.all_hold);
    CHECK(r.worst_slack >= -1e-12);
}

TEST_CASE("metric inequality finds a violation for overlapping ranges") {
    const ComplexMatrix a = ComplexMatrix::diagonal(std::vector<double>{1.0, 0.0});
    RangeOrthQuery q{a, a, 200, {}};
    const MetricInequalityResult r = metric_inequality_test(q);
    CHECK(!r.all_hold);
    REQUIRE(r.witness.has_value());
    const auto& [x, y] = *r.witness;
    CHECK(operator_norm(a * x + a * y) < operator_norm(a * x));
}

TEST_CASE("majorization witness on the frozen diagonal pair") {
    const ComplexMatrix a = ComplexMatrix::diagonal(std::vector<double>{1.0, 0.0});
    const ComplexMatrix b = ComplexMatrix::diagonal(std::vector<double>{0.0, 1.0});
    const MajorizationResult r = majorization_test(a, b, 0);
    CHECK(!r.dominated);
    REQUIRE(r.witness.has_value());
    // First scan point t = 0.1: X = diag(0, 0.1), |BX| - |AX| = 0.1.
    CHECK(r.witness_gap == doctest::Approx(0.1));
}

TEST_CASE("majorization accepts a dominated pair") {
    Rng rng(41);
    const ComplexMatrix b = rng.gaussian(3, 3);
    const ComplexMatrix extra = rng.gaussian(3, 3);
    const ComplexMatrix a = psd_sqrt(b.adjoint() * b + extra.adjoint() * extra);
    const MajorizationResult r = majorization_test(a, b, 200);
    CHECK(r.dominated);
    CHECK(!r.witness.has_value());
}

TEST_CASE("isometry family identity") {
    Rng rng(42);
    const ComplexMatrix u = rng.unitary(3);
    IsometryFamilyQuery q;
    q.members = {u};
    q.targets = {ComplexMatrix::identity(3)};
    q.trials = 50;
    const IsometryIdentityResult good = check_isometry_identity(q);
    CHECK(good.algebraic);
    CHECK(good.consistent);
    CHECK(good.worst_rel_err < 1e-10);

    q.targets = {ComplexMatrix::identity(3) * cplx{0.5, 0.0}};
    const IsometryIdentityResult bad = check_isometry_identity(q);
    CHECK(!bad.algebraic);
    CHECK(!bad.consistent);
}

TEST_CASE("state certificate decides both directions") {
    const MatrixPair p = canonical_pair();
    const OrthoVerdict yes = pythagoras_via_state(p.a, p.b);
    CHECK(yes.status == OrthoStatus::CertifiedOrthogonal);
    CHECK(yes.witness_vector.has_value());

    const ComplexMatrix d10 = ComplexMatrix::diagonal(std::vector<double>{1.0, 0.0});
    const ComplexMatrix d01 = ComplexMatrix::diagonal(std::vector<double>{0.0, 1.0});
    const OrthoVerdict no = pythagoras_via_state(d10, d01);
    CHECK(no.status == OrthoStatus::CertifiedNotOrthogonal);

    CHECK_THROWS_AS(pythagoras_via_state(d10, d10), PreconditionViolated);
}
