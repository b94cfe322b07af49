#include <doctest.h>

#include <cmath>

#include "orthokit/errors.hpp"
#include "orthokit/generators.hpp"
#include "orthokit/linalg.hpp"

using namespace orthokit;

TEST_CASE("canonical pair entries") {
    const MatrixPair p = canonical_pair();
    CHECK(p.a(1, 0) == cplx{1.0, 0.0});
    CHECK(p.b(0, 0) == cplx{1.0, 0.0});
    CHECK(p.a.frobenius_norm() == doctest::Approx(1.0));
}

TEST_CASE("corner pair norms and constraints") {
    const MatrixPair p = corner_pair(0.5, cplx{0.5, 0.0}, cplx{0.6, 0.0});
    CHECK(operator_norm(p.a) == doctest::Approx(1.0));
    CHECK(operator_norm(p.b) == doctest::Approx(1.0));

    CHECK_THROWS_AS(corner_pair(1.5, cplx{0.1, 0}, cplx{0.1, 0}), ParamConstraintViolated);
    CHECK_THROWS_AS(corner_pair(0.5, cplx{0.1, 0}, cplx{0, 0}), ParamConstraintViolated);
    CHECK_THROWS_AS(corner_pair(0.5, cplx{0.8, 0}, cplx{0.6, 0}), ParamConstraintViolated);
    // Boundary parameters are accepted (the inequality is non-strict).
    const double beta = 0.6;
    const double alpha = std::sqrt((1.0 - beta * beta) * (1.0 - 0.25));
    CHECK_NOTHROW(corner_pair(0.5, cplx{alpha, 0.0}, cplx{beta, 0.0}));
}

TEST_CASE("trig pair shapes and norms") {
    const MatrixPair p = trig_pair(0.7, 0.4, cplx{1, 0}, cplx{0, 1}, cplx{-1, 0});
    CHECK(p.a.rows() == 3);
    CHECK(p.a.cols() == 2);
    CHECK(operator_norm(p.a) == doctest::Approx(1.0));
    CHECK(operator_norm(p.b) == doctest::Approx(1.0));
    CHECK_THROWS_AS(trig_pair(0.7, 0.4, cplx{1.1, 0}, cplx{1, 0}, cplx{1, 0}),
                    ParamConstraintViolated);
}

TEST_CASE("partial isometry pair algebra") {
    const MatrixPair p = partial_isometry_pair(4, 99);
    const ComplexMatrix aa = p.a.adjoint() * p.a;
    CHECK((aa - p.b).frobenius_norm() < 1e-12);
    CHECK((p.a * p.a.adjoint() - (ComplexMatrix::identity(4) - p.b)).frobenius_norm() < 1e-12);
    CHECK(operator_norm(p.a.adjoint() * p.b) < 1e-12);

    const MatrixPair again = partial_isometry_pair(4, 99);
    CHECK((again.a - p.a).frobenius_norm() == 0.0);
    const MatrixPair other = partial_isometry_pair(4, 100);
    CHECK((other.a - p.a).frobenius_norm() > 1e-3);

    CHECK_THROWS_AS(partial_isometry_pair(3, 0), OddDimension);
}

TEST_CASE("identity conjugation reproduces the canonical block layout") {
    // Seeded conjugation aside, the raw n = 2 layout is the canonical pair
    // with roles swapped onto (A, B) = (shift, projection).
    MatrixPair raw;
    raw.a = ComplexMatrix(2, 2);
    raw.a(1, 0) = 1.0;
    raw.b = ComplexMatrix(2, 2);
    raw.b(0, 0) = 1.0;
    CHECK((raw.a - canonical_pair().a).frobenius_norm() == 0.0);
    CHECK((raw.b - canonical_pair().b).frobenius_norm() == 0.0);
}

TEST_CASE("rank-1 target families validate parameters") {
    CHECK_NOTHROW(rank1_column_pair(cplx{0.6, 0}, cplx{0.8, 0}, true));
    CHECK_THROWS_AS(rank1_column_pair(cplx{0.6, 0}, cplx{0.9, 0}, false),
                    ParamConstraintViolated);
    CHECK_NOTHROW(rank1_diagonal_pair(cplx{0.8, 0}, 0.6, cplx{0.6, 0}, false));
    CHECK_NOTHROW(rank1_diagonal_pair(cplx{0.0, 0}, 0.4, cplx{1.0, 0}, false));
    CHECK_THROWS_AS(rank1_diagonal_pair(cplx{0.8, 0}, 0.5, cplx{0.6, 0}, false),
                    ParamConstraintViolated);
}

TEST_CASE("column canonical family") {
    const auto fam = column_canonical(2, 2);
    REQUIRE(fam.size() == 2);
    CHECK(fam[0](0, 0) == cplx{1.0, 0.0});
    CHECK(fam[1](1, 0) == cplx{1.0, 0.0});
    CHECK_THROWS_AS(column_canonical(4, 3), TooMany);
}

TEST_CASE("family dispatch") {
    CHECK(family_names().size() == 6);
    FamilySpec spec;
    spec.name = "corner";
    spec.params = {{"b", 0.5}, {"alpha_re", 0.5}, {"beta_re", 0.6}};
    const MatrixPair p = generate(spec);
    CHECK(p.a.rows() == 3);
    spec.name = "nope";
    CHECK_THROWS_AS(generate(spec), NotFound);
}
