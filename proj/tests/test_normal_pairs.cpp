#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "orthokit/errors.hpp"
#include "orthokit/generators.hpp"
#include "orthokit/normal_pairs.hpp"
#include "orthokit/rng.hpp"

using namespace orthokit;

TEST_CASE("joint spectrum recovers planted diagonal values") {
    Rng rng(31);
    const std::size_t d = 5;
    std::vector<cplx> da(d), db(d);
    for (std::size_t i = 0; i < d; ++i) {
        da[i] = rng.cgauss();
        db[i] = rng.cgauss();
    }
    const ComplexMatrix u = rng.unitary(d);
    const ComplexMatrix a = u.adjoint() * ComplexMatrix::diagonal(da) * u;
    const ComplexMatrix b = u.adjoint() * ComplexMatrix::diagonal(db) * u;
    const JointSpectrum js = joint_spectrum(a, b);
    REQUIRE(js.points.size() == d);
    for (std::size_t i = 0; i < d; ++i) {
        double best = 1e9;
        for (const auto& [za, zb] : js.points)
            best = std::min(best, std::abs(za - da[i]) + std::abs(zb - db[i]));
        CHECK(best < 1e-8);
    }
}

TEST_CASE("joint spectrum with degenerate first combination") {
    // A has a repeated eigenvalue; B separates the eigenspace.
    const ComplexMatrix a = ComplexMatrix::diagonal(std::vector<double>{1.0, 1.0, 2.0});
    const ComplexMatrix b = ComplexMatrix::diagonal(std::vector<double>{3.0, 4.0, 5.0});
    const JointSpectrum js = joint_spectrum(a, b);
    std::vector<double> bs;
    for (const auto& [za, zb] : js.points) bs.push_back(zb.real());
    std::sort(bs.begin(), bs.end());
    CHECK(bs[0] == doctest::Approx(3.0));
    CHECK(bs[2] == doctest::Approx(5.0));
}

TEST_CASE("joint spectrum validates inputs") {
    const ComplexMatrix shift = ComplexMatrix::from_rows({{0, 1}, {0, 0}});
    CHECK_THROWS_AS(joint_spectrum(shift, ComplexMatrix::identity(2)), NotNormal);

    const ComplexMatrix x = ComplexMatrix::from_rows({{0, 1}, {1, 0}});
    const ComplexMatrix z = ComplexMatrix::diagonal(std::vector<double>{1.0, -1.0});
    CHECK_THROWS_AS(joint_spectrum(x, z), NotCommuting);
}

TEST_CASE("commuting normal pairs are always refuted") {
    const ComplexMatrix a = ComplexMatrix::diagonal(std::vector<double>{1.0, 0.5});
    const ComplexMatrix b = ComplexMatrix::diagonal(std::vector<double>{0.25, 1.0});
    const OrthoVerdict v = check_normal_pair(a, b);
    CHECK(v.status == OrthoStatus::CertifiedNotOrthogonal);
    CHECK((v.reason == VerdictReason::HalfBallViolation ||
           v.reason == VerdictReason::CoverageGapViolation));
    CHECK(v.witness_lambda.has_value());
}

TEST_CASE("half-ball violation detected for an expanding pair") {
    // Joint values (1, 1): |zeta|^2 + t^2 = 2 after normalization stays at
    // (1, 1) since both norms are already 1.
    const ComplexMatrix i2 = ComplexMatrix::identity(2);
    const OrthoVerdict v = check_normal_pair(i2, i2);
    CHECK(v.status == OrthoStatus::CertifiedNotOrthogonal);
    CHECK(v.reason == VerdictReason::HalfBallViolation);
}

TEST_CASE("cone refuter") {
    const MatrixPair p = canonical_pair();
    const ConeRefuterResult clean = cone_refuter(p.a, p.b, 64);
    CHECK(!clean.refuted);
    CHECK(clean.points.size() >= 64);
    CHECK(clean.coverage_fraction >= 0.0);
    CHECK(clean.coverage_fraction <= 1.0);

    const ComplexMatrix big = ComplexMatrix::identity(2) * cplx{1.2, 0.0};
    const ConeRefuterResult bad = cone_refuter(big, ComplexMatrix::identity(2), 64);
    CHECK(bad.refuted);
    CHECK(bad.points[bad.witness_index].x < 0.0);
}
