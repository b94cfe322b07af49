#include <doctest.h>

#include <cmath>

#include "orthokit/column_orth.hpp"
#include "orthokit/errors.hpp"
#include "orthokit/generators.hpp"

using namespace orthokit;

TEST_CASE("canonical column families certify") {
    ColumnFamily fam{column_canonical(3, 4), {}};
    const ColumnReport rep = check_column_orthonormal(fam);
    CHECK(rep.status == OrthoStatus::CertifiedOrthogonal);
    CHECK(rep.row_norm == doctest::Approx(1.0));
    CHECK(rep.common_unit_dim >= 1);
    CHECK(rep.witness.rows() == 4);

    const CoefficientIdentityResult ident = coefficient_identity_test(fam, 2, 50);
    CHECK(ident.pass);
    CHECK(ident.worst_rel_err < 1e-10);
}

TEST_CASE("diagonal projections are refuted with the scalar identity") {
    ColumnFamily fam;
    fam.members = {ComplexMatrix::diagonal(std::vector<double>{1.0, 0.0}),
                   ComplexMatrix::diagonal(std::vector<double>{0.0, 1.0})};
    CHECK(check_column_orthonormal(fam).status == OrthoStatus::CertifiedNotOrthogonal);

    const CoefficientIdentityResult ident = coefficient_identity_test(fam, 1, 1);
    // The deterministic identity-coefficient trial already gives 0.5.
    CHECK(ident.worst_rel_err == doctest::Approx(0.5));
    CHECK(ident.worst_trial == 0);
}

TEST_CASE("row norm above one refutes") {
    ColumnFamily fam;
    fam.members = {ComplexMatrix::identity(2), ComplexMatrix::identity(2)};
    const ColumnReport rep = check_column_orthonormal(fam);
    CHECK(rep.status == OrthoStatus::CertifiedNotOrthogonal);
    CHECK(rep.row_norm == doctest::Approx(2.0));
}

TEST_CASE("gram matrix at the common norming vector") {
    ColumnFamily fam{column_canonical(3, 3), {}};
    const ComplexMatrix e1 = ComplexMatrix::basis_vector(3, 0);
    const ComplexMatrix g = gram_at_state(fam, e1);
    CHECK((g - ComplexMatrix::identity(3)).frobenius_norm() < 1e-12);
}

TEST_CASE("input validation") {
    ColumnFamily empty;
    CHECK_THROWS_AS(check_column_orthonormal(empty), EmptyFamily);
    ColumnFamily mixed;
    mixed.members = {ComplexMatrix::identity(2), ComplexMatrix::identity(3)};
    CHECK_THROWS_AS(check_column_orthonormal(mixed), ShapeMismatch);
}
