#include <doctest.h>

#include <cmath>

#include "orthokit/errors.hpp"
#include "orthokit/generators.hpp"
#include "orthokit/pythagoras.hpp"
#include "orthokit/rank1.hpp"
#include "orthokit/rng.hpp"

using namespace orthokit;

TEST_CASE("decompose the canonical pair") {
    const MatrixPair p = canonical_pair();
    const Rank1Decomposition dec = decompose_rank1(p.a, p.b);
    CHECK(dec.a.rows() == 1);
    CHECK(std::abs(dec.a(0, 0)) < 1e-12);
    CHECK(std::abs(std::abs(dec.b(0, 0)) - 1.0) < 1e-12);
    CHECK(std::abs(dec.c(0, 0)) < 1e-12);

    const Rank1ConditionReport rep = rank1_conditions(dec);
    CHECK(rep.pass);
    CHECK(rep.norm_split_residual < 1e-12);
}

TEST_CASE("decompose validates its inputs") {
    const ComplexMatrix not_proj = ComplexMatrix::diagonal(std::vector<double>{1.0, 1.0, 0.0});
    CHECK_THROWS_AS(decompose_rank1(ComplexMatrix::identity(3), not_proj), NotRank1Projection);

    ComplexMatrix b(3, 3);
    b(0, 0) = 1.0;
    CHECK_THROWS_AS(decompose_rank1(ComplexMatrix::identity(3), b), Refuted11Block);
}

TEST_CASE("certify canonical pair and its transpose") {
    const MatrixPair p = canonical_pair();
    CHECK(rank1_certify(p.a, p.b).status == OrthoStatus::CertifiedOrthogonal);
    CHECK(rank1_certify(p.a.transpose(), p.b).status == OrthoStatus::CertifiedOrthogonal);
}

TEST_CASE("certify refutes the identity and random operators") {
    ComplexMatrix b(3, 3);
    b(0, 0) = 1.0;
    const OrthoVerdict v = rank1_certify(ComplexMatrix::identity(3), b);
    CHECK(v.status == OrthoStatus::CertifiedNotOrthogonal);
    CHECK(v.reason == VerdictReason::Rank1DiagonalBlockNonzero);

    Rng rng(21);
    const OrthoVerdict rv = rank1_certify(rng.gaussian(4, 4), [&] {
        ComplexMatrix p(4, 4);
        p(0, 0) = 1.0;
        return p;
    }());
    CHECK(rv.status == OrthoStatus::CertifiedNotOrthogonal);
}

TEST_CASE("closed-form families certify and stay flat") {
    const MatrixPair v1 = rank1_column_pair(cplx{0.6, 0.0}, cplx{0.0, 0.8}, false);
    CHECK(rank1_certify(v1.a, v1.b).status == OrthoStatus::CertifiedOrthogonal);
    const MatrixPair v2 = rank1_diagonal_pair(cplx{0.8, 0.0}, 0.6, cplx{0.0, 0.6}, false);
    CHECK(rank1_certify(v2.a, v2.b).status == OrthoStatus::CertifiedOrthogonal);
    CHECK(defect_profile(v2.a, v2.b, GridSpec::defaults()).max_abs_defect < 1e-10);
}

TEST_CASE("construct the canonical operator from empty block data") {
    const ComplexMatrix a = ComplexMatrix::zero(1, 1);
    const ComplexMatrix c = ComplexMatrix::zero(1, 1);
    const ComplexMatrix u = ComplexMatrix::identity(1);
    const auto built = construct_prop_operator(a, c, u);
    REQUIRE(built.has_value());
    CHECK(std::abs((*built)(1, 0)) == doctest::Approx(1.0));
    ComplexMatrix b(2, 2);
    b(0, 0) = 1.0;
    CHECK(rank1_certify(*built, b).status == OrthoStatus::CertifiedOrthogonal);
}

TEST_CASE("construct a 3x3 operator with a swap symmetry") {
    ComplexMatrix a(2, 1);
    a(0, 0) = std::sqrt(0.5);
    const ComplexMatrix c =
        ComplexMatrix::diagonal(std::vector<double>{0.0, std::sqrt(0.5)});
    const ComplexMatrix u = ComplexMatrix::from_rows({{0, 1}, {1, 0}});
    const auto built = construct_prop_operator(a, c, u);
    REQUIRE(built.has_value());
    ComplexMatrix b(3, 3);
    b(0, 0) = 1.0;
    CHECK(rank1_certify(*built, b).status == OrthoStatus::CertifiedOrthogonal);
    const NormalizedPair np = normalize_pair(*built, b);
    CHECK(defect_profile(np.a, np.b, GridSpec::defaults()).max_abs_defect < 1e-8);
}

TEST_CASE("construct rejects a non-commuting symmetry") {
    ComplexMatrix a(2, 1);
    a(0, 0) = 0.5;
    const ComplexMatrix c = ComplexMatrix::diagonal(std::vector<double>{0.5, 0.2});
    const ComplexMatrix u = ComplexMatrix::from_rows({{0, 1}, {1, 0}});
    CHECK_THROWS_AS(construct_prop_operator(a, c, u), PreconditionViolated);
}
