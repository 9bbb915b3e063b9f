#include <doctest.h>

#include <cmath>
#include <cstdlib>

#include "stripcount/counting.hpp"
#include "stripcount/transfer.hpp"

using namespace stripcount;

TEST_CASE("base matrices") {
    TransferMatrix2 h = hex_matrix();
    CHECK(h.at(1, 1) == PolyY{1, 1});  // (S,S)
    CHECK(poly_eval_at_one(h.at(0, 0)) == 1);
    CHECK(poly_eval_at_one(h.at(1, 0)) == 1);
    CHECK(poly_eval_at_one(h.at(1, 1)) == 2);

    TransferMatrix2 q = bar_matrix();
    CHECK(q.at(0, 0) == PolyY{1, 1});  // (T,T)
    CHECK(q.at(1, 0) == PolyY{0, 2, 1});
    CHECK(q.at(1, 1) == PolyY{1, 2, 1});
}

TEST_CASE("powers of H match the displayed matrices") {
    TransferMatrix2 h2 = matrix_power(hex_matrix(), 2);
    CHECK(h2.at(0, 0) == PolyY{1, 1});
    CHECK(h2.at(0, 1) == PolyY{2, 1});
    CHECK(h2.at(1, 0) == PolyY{0, 2, 1});
    CHECK(h2.at(1, 1) == PolyY{1, 3, 1});

    TransferMatrix2 h3 = matrix_power(hex_matrix(), 3);
    CHECK(h3.at(0, 1) == PolyY{3, 4, 1});  // (T,S)
    CHECK(h3.at(1, 1) == PolyY{1, 6, 5, 1});

    CHECK(matrix_equal(matrix_power(bar_matrix(), 0), TransferMatrix2::identity()));
}

TEST_CASE("power associativity on random exponents") {
    std::srand(20240811);
    for (const TransferMatrix2& m : {hex_matrix(), bar_matrix()})
        for (int trial = 0; trial < 8; ++trial) {
            unsigned long a = std::rand() % 9, b = std::rand() % 9;
            CHECK(matrix_equal(matrix_power(m, a + b),
                               matrix_mul(matrix_power(m, a), matrix_power(m, b))));
        }
}

TEST_CASE("contracted polynomials reproduce the published tables") {
    CHECK(hex_polynomial(1) == PolyY{0, 1});
    CHECK(hex_polynomial(2) == PolyY{0, 1, 1});
    CHECK(hex_polynomial(5) == PolyY{0, 1, 10, 15, 7, 1});
    CHECK(bar_polynomial(1) == PolyY{0, 1, 1});
    CHECK(bar_polynomial(3) == PolyY{0, 1, 15, 29, 21, 7, 1});
}

TEST_CASE("transfer rows agree with the recurrence triangles") {
    CountTriangle hex = hex_triangle(200);
    for (int n = 1; n <= 200; ++n) {
        PolyY p = hex_polynomial(n);
        for (int k = 1; k <= n; ++k)
            CHECK((k < static_cast<int>(p.size()) ? p[k] : BigInt(0)) == hex.at(n, k));
    }
    CountTriangle bar = bar_triangle(120);
    for (int n = 1; n <= 120; ++n) {
        PolyY p = bar_polynomial(n);
        for (int k = 1; k <= 2 * n; ++k)
            CHECK((k < static_cast<int>(p.size()) ? p[k] : BigInt(0)) == bar.at(n, k));
    }
}

TEST_CASE("closed-form power lemma holds") {
    for (int n : {1, 2, 3, 10, 25, 50}) CHECK(verify_h_power_closed_form(n));
}

TEST_CASE("Fibonacci power lemma holds") {
    for (int n = 1; n <= 80; ++n) CHECK(verify_fib_power(n));
}

TEST_CASE("dominant eigenvalues at y=1") {
    CHECK(dominant_eigenvalue_at_one(hex_matrix()) ==
          doctest::Approx((3 + std::sqrt(5.0)) / 2).epsilon(1e-12));
    CHECK(dominant_eigenvalue_at_one(bar_matrix()) ==
          doctest::Approx(3 + std::sqrt(10.0)).epsilon(1e-12));
    CHECK(dominant_eigenvalue_at_one(TransferMatrix2::identity()) == doctest::Approx(1.0));
}

TEST_CASE("total growth converges to the dominant eigenvalue") {
    int n = 60;
    BigRat bar_ratio(bar_total(n + 1), bar_total(n));
    bar_ratio.canonicalize();
    CHECK(std::abs(bar_ratio.get_d() - dominant_eigenvalue_at_one(bar_matrix())) < 1e-10);
    BigRat hex_ratio(hex_total(n + 1), hex_total(n));
    hex_ratio.canonicalize();
    CHECK(std::abs(hex_ratio.get_d() - dominant_eigenvalue_at_one(hex_matrix())) < 1e-10);
}
