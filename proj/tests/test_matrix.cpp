#include <doctest.h>

#include <random>

#include "detrep/matrix.hpp"
#include "oracles.hpp"

using namespace detrep;

TEST_CASE("float determinant and solve") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 10; ++trial) {
        ComplexMatrix a = oracles::random_matrix(rng, 5, 5);
        ComplexMatrix b = oracles::random_matrix(rng, 5, 2);
        ComplexMatrix x = solve_lu(a, b);
        CHECK((a * x - b).frobenius() < 1e-10 * (1 + b.frobenius()));
        // det(A) * det(A^{-1}) = 1
        ComplexMatrix inv = solve_lu(a, ComplexMatrix::identity(5));
        CHECK(std::abs(det_lu(a) * det_lu(inv) - Cplx(1, 0)) < 1e-9);
    }
    CHECK(std::abs(det_lu(ComplexMatrix(0, 0)) - Cplx(1, 0)) == 0);
    CHECK_THROWS_AS(solve_lu(ComplexMatrix(2, 2), ComplexMatrix(2, 1)), Error);
}

TEST_CASE("exact determinant agrees with cofactor expansion on small cases") {
    RationalMatrix m(3, 3);
    long vals[9] = {2, -1, 3, 0, 5, 1, -2, 4, 7};
    for (int i = 0; i < 9; ++i) m(i / 3, i % 3) = RationalComplex(vals[i]);
    // det = 2(35-4) +1(0+2) +3(0+10) = 62 + 2 + 30 = 94
    CHECK(det_exact(m) == RationalComplex(94));

    // Singular matrix
    RationalMatrix s(2, 2);
    s(0, 0) = RationalComplex(1);
    s(0, 1) = RationalComplex(2);
    s(1, 0) = RationalComplex(2);
    s(1, 1) = RationalComplex(4);
    CHECK(det_exact(s).is_zero());
    CHECK_THROWS_AS(solve_exact(s, RationalMatrix::identity(2)), Error);
}

TEST_CASE("exact solve inverts exactly") {
    std::mt19937_64 rng(7);
    RationalMatrix a(4, 4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) a(i, j) = oracles::random_rational(rng);
    if (det_exact(a).is_zero()) return;  // vanishing determinant is measure zero
    RationalMatrix inv = solve_exact(a, RationalMatrix::identity(4));
    CHECK(a * inv == RationalMatrix::identity(4));
}

TEST_CASE("exact and float determinants agree through promotion") {
    std::mt19937_64 rng(11);
    RationalMatrix a(5, 5);
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) a(i, j) = oracles::random_rational(rng);
    Cplx exact = det_exact(a).to_complex();
    Cplx approx = det_lu(a.to_complex());
    CHECK(std::abs(exact - approx) <= 1e-9 * (1 + std::abs(exact)));
}

TEST_CASE("submatrix extraction") {
    ComplexMatrix m(3, 4);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 4; ++j) m(i, j) = Cplx(i, j);
    ComplexMatrix s = m.submatrix({0, 2}, {1, 3});
    CHECK(s.rows() == 2);
    CHECK(s(0, 0) == Cplx(0, 1));
    CHECK(s(1, 1) == Cplx(2, 3));
}
