#include <doctest.h>

#include <array>
#include <cmath>

#include "orthokit/complex_matrix.hpp"
#include "orthokit/errors.hpp"
#include "orthokit/linalg.hpp"
#include "orthokit/rng.hpp"

using namespace orthokit;

namespace {

// Independent norm oracle: power iteration on the Gram matrix.
double power_norm(const ComplexMatrix& m, int iters = 500) {
    const ComplexMatrix g = m.adjoint() * m;
    if (g.rows() == 0) return 0.0;
    Rng rng(12345);
    ComplexMatrix v = rng.unit_vector(g.rows());
    double lam = 0.0;
    for (int i = 0; i < iters; ++i) {
        ComplexMatrix w = g * v;
        const double n = vector_norm(w);
        if (n == 0.0) return 0.0;
        w *= cplx{1.0 / n, 0.0};
        lam = inner(g * w, w).real();
        v = w;
    }
    return std::sqrt(std::max(lam, 0.0));
}

// Independent determinant oracle: permutation expansion for 3x3.
cplx det3_oracle(const ComplexMatrix& m) {
    return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
           m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
           m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

}  // namespace

TEST_CASE("matrix basics") {
    const ComplexMatrix a = ComplexMatrix::from_rows({{1, 2}, {3, 4}});
    CHECK(a(0, 1) == cplx{2.0, 0.0});
    CHECK(a.transpose()(1, 0) == cplx{2.0, 0.0});
    const ComplexMatrix i2 = ComplexMatrix::identity(2);
    CHECK((a * i2 - a).frobenius_norm() == doctest::Approx(0.0));
    CHECK(a.trace() == cplx{5.0, 0.0});

    const ComplexMatrix h = ComplexMatrix::from_rows({{1, cplx{0, 1}}, {cplx{0, -1}, 2}});
    CHECK(is_hermitian(h, 1e-12));
    CHECK(!is_hermitian(a, 1e-12));
}

TEST_CASE("hermitian_eig frozen values") {
    const auto e1 = hermitian_eig(ComplexMatrix::from_rows({{2, 1}, {1, 2}}));
    CHECK(e1.eigenvalues[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(e1.eigenvalues[1] == doctest::Approx(3.0).epsilon(1e-12));

    const auto e2 =
        hermitian_eig(ComplexMatrix::from_rows({{0, cplx{0, 1}}, {cplx{0, -1}, 0}}));
    CHECK(e2.eigenvalues[0] == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(e2.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("hermitian_eig residual and rejection") {
    Rng rng(1);
    const ComplexMatrix g = rng.gaussian(7, 7);
    const ComplexMatrix m = g + g.adjoint();
    const auto eig = hermitian_eig(m);
    const ComplexMatrix lam = ComplexMatrix::diagonal(std::span<const double>(eig.eigenvalues));
    CHECK((m * eig.eigenvectors - eig.eigenvectors * lam).frobenius_norm() <
          1e-10 * m.frobenius_norm());
    CHECK((eig.eigenvectors.adjoint() * eig.eigenvectors - ComplexMatrix::identity(7))
              .frobenius_norm() < 1e-11);
    CHECK_THROWS_AS(hermitian_eig(ComplexMatrix::from_rows({{0, 1}, {0, 0}})), NotHermitian);
}

TEST_CASE("operator_norm against the power-iteration oracle") {
    CHECK(operator_norm(ComplexMatrix::from_rows({{1, 1}, {1, 1}})) ==
          doctest::Approx(2.0).epsilon(1e-12));
    CHECK(operator_norm(ComplexMatrix::zero(3, 2)) == 0.0);
    Rng rng(2);
    for (int i = 0; i < 10; ++i) {
        const ComplexMatrix m = rng.gaussian(6, 5);
        CHECK(operator_norm(m) == doctest::Approx(power_norm(m)).epsilon(1e-8));
    }
}

TEST_CASE("determinant against the permutation oracle") {
    Rng rng(3);
    for (int i = 0; i < 20; ++i) {
        ComplexMatrix m(3, 3);
        for (std::size_t r = 0; r < 3; ++r)
            for (std::size_t c = 0; c < 3; ++c)
                m(r, c) = cplx{static_cast<double>(static_cast<int>(rng.integer() % 11) - 5),
                               static_cast<double>(static_cast<int>(rng.integer() % 11) - 5)};
        const cplx expected = det3_oracle(m);
        CHECK(std::abs(determinant(m) - expected) < 1e-10 * (1.0 + std::abs(expected)));
    }
}

TEST_CASE("polar decomposition of a nilpotent block") {
    const ComplexMatrix b = ComplexMatrix::from_rows({{0, 2}, {0, 0}});
    const auto [u, p] = polar_unitary(b);
    CHECK((u * p - b).frobenius_norm() < 1e-12);
    CHECK((u.adjoint() * u - ComplexMatrix::identity(2)).frobenius_norm() < 1e-12);
    CHECK(std::abs(u(0, 1) - cplx{1.0, 0.0}) < 1e-12);
    CHECK(std::abs(u(1, 0) - cplx{1.0, 0.0}) < 1e-12);
    CHECK(p(1, 1).real() == doctest::Approx(2.0));
}

TEST_CASE("psd_sqrt and positive_part") {
    const ComplexMatrix m = ComplexMatrix::from_rows({{2, 1}, {1, 2}});
    const ComplexMatrix r = psd_sqrt(m);
    CHECK((r * r - m).frobenius_norm() < 1e-12);
    CHECK_THROWS_AS(psd_sqrt(ComplexMatrix::diagonal(std::vector<double>{1.0, -1.0})), NotPSD);

    const ComplexMatrix pp =
        positive_part(ComplexMatrix::diagonal(std::vector<double>{2.0, -3.0}));
    CHECK(pp(0, 0).real() == doctest::Approx(2.0));
    CHECK(std::abs(pp(1, 1)) < 1e-12);
}

TEST_CASE("eigenspace and subspace intersection") {
    const ComplexMatrix m = ComplexMatrix::diagonal(std::vector<double>{1.0, 1.0, 0.0});
    CHECK(eigenspace(m, 1.0, 1e-8).cols() == 2);
    CHECK(eigenspace(m, 2.0, 1e-8).cols() == 0);

    ComplexMatrix q1(3, 2), q2(3, 2);
    q1.set_col(0, ComplexMatrix::basis_vector(3, 0));
    q1.set_col(1, ComplexMatrix::basis_vector(3, 1));
    q2.set_col(0, ComplexMatrix::basis_vector(3, 1));
    q2.set_col(1, ComplexMatrix::basis_vector(3, 2));
    const std::array<ComplexMatrix, 2> bases{q1, q2};
    const ComplexMatrix common = subspace_intersection(bases);
    REQUIRE(common.cols() == 1);
    CHECK(std::abs(std::abs(common(1, 0)) - 1.0) < 1e-10);
}

TEST_CASE("kron norm multiplicativity") {
    Rng rng(4);
    const ComplexMatrix a = rng.gaussian(2, 3);
    const ComplexMatrix b = rng.gaussian(3, 2);
    CHECK(operator_norm(kron(a, b)) ==
          doctest::Approx(operator_norm(a) * operator_norm(b)).epsilon(1e-9));
}

TEST_CASE("rng unitary is unitary and seeded") {
    Rng rng(5);
    const ComplexMatrix u = rng.unitary(4);
    CHECK((u.adjoint() * u - ComplexMatrix::identity(4)).frobenius_norm() < 1e-12);
    Rng rng2(5);
    CHECK((rng2.unitary(4) - u).frobenius_norm() == 0.0);
}
