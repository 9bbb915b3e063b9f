#include <doctest.h>

#include <cmath>

#include "stripcount/analysis.hpp"
#include "stripcount/counting.hpp"

using namespace stripcount;

TEST_CASE("column recurrences vanish on both triangles") {
    CountTriangle bar = bar_triangle(60);
    CountTriangle hex = hex_triangle(60);
    for (int k = 1; k <= 8; ++k) {
        CHECK(check_column_recurrence(bar, k, 60));
        CHECK(check_column_recurrence(hex, k, 60));
    }
    // the k=3 hex case spelled out from the table values
    BigInt sum = hex.at(6, 3) - 5 * hex.at(5, 3) + 10 * hex.at(4, 3) - 10 * hex.at(3, 3) +
                 5 * hex.at(2, 3) - hex.at(1, 3);
    CHECK(hex.at(6, 3) == 35);
    CHECK(sum == 0);
}

TEST_CASE("column recurrence fails on a corrupted triangle") {
    CountTriangle bar = bar_triangle(20);
    bar.rows[14][1] += 1;
    CHECK_FALSE(check_column_recurrence(bar, 2, 20));
}

TEST_CASE("fitted columns extrapolate exactly") {
    CountTriangle bar = bar_triangle(60);
    CountTriangle hex = hex_triangle(60);
    for (int k = 1; k <= 6; ++k) {
        for (const CountTriangle* tri : {&bar, &hex}) {
            ColumnPolynomial poly = fit_column(*tri, k);
            CHECK(poly.degree() <= 2 * k - 2);
            for (int n = 1; n <= 60; ++n) CHECK(poly.eval(n) == BigRat(tri->at(n, k)));
        }
    }

    // named columns: hexagonal numbers and C(n,2)
    ColumnPolynomial bar2 = fit_column(bar, 2);
    CHECK(bar2.coefficients == std::vector<BigRat>{BigRat(0), BigRat(-1), BigRat(2)});
    ColumnPolynomial bar1 = fit_column(bar, 1);
    CHECK(bar1.coefficients == std::vector<BigRat>{BigRat(1)});
    ColumnPolynomial hex2 = fit_column(hex, 2);
    CHECK(hex2.coefficients == std::vector<BigRat>{BigRat(0), BigRat(-1, 2), BigRat(1, 2)});
}

TEST_CASE("fitted bar diagonals extrapolate exactly with leading 3^j/j!") {
    CountTriangle bar = bar_triangle(60);
    for (int j = 0; j <= 6; ++j) {
        ColumnPolynomial poly = fit_diagonal(bar, j);
        CHECK(poly.degree() <= j);
        for (int n = (j + 2) / 2; n <= 60; ++n)
            CHECK(poly.eval(n) == BigRat(bar.at(n, 2 * n - j)));

        BigRat lead(1);
        for (int i = 1; i <= j; ++i) lead *= BigRat(3, i);
        lead.canonicalize();
        CHECK(poly.leading_coefficient() == lead);
    }
    CHECK(fit_diagonal(bar, 1).coefficients == std::vector<BigRat>{BigRat(-2), BigRat(3)});
    CHECK(fit_diagonal(bar, 2).eval(3) == BigRat(21));  // r_4(3)
    CHECK(fit_diagonal(bar, 0).coefficients == std::vector<BigRat>{BigRat(1)});
}

TEST_CASE("expected parts are exact rationals") {
    CountTriangle hex = hex_triangle(10);
    CHECK(expected_parts(hex, 4) == BigRat(32, 13));
    CountTriangle bar = bar_triangle(10);
    CHECK(expected_parts(bar, 1) == BigRat(3, 2));
    CHECK(expected_parts(bar, 2) == BigRat(29, 12));
}

TEST_CASE("slope converges to the Darboux constants") {
    CountTriangle hex = hex_triangle(101);
    CHECK(observed_slope(hex, 3) == doctest::Approx(6.0 / 13).epsilon(1e-12));

    AsymptoticProfile hex_profile = AsymptoticProfile::of(Family::Honeycomb);
    CHECK(hex_profile.slope_target == doctest::Approx(0.4472136).epsilon(1e-6));
    CHECK(std::abs(observed_slope(hex, 100) - hex_profile.slope_target) < 1e-6);

    CountTriangle bar = bar_triangle(101);
    AsymptoticProfile bar_profile = AsymptoticProfile::of(Family::ChocolateBar);
    CHECK(bar_profile.slope_target == doctest::Approx(0.8675445).epsilon(1e-6));
    CHECK(std::abs(observed_slope(bar, 100) - bar_profile.slope_target) < 1e-6);

    // |slope(n) - target| decreases monotonically from n = 10 until it sinks
    // into double-precision noise (the exact error ~ (lambda2/lambda1)^n hits
    // 1e-16 within a couple dozen rows)
    for (const CountTriangle* tri : {&bar, &hex}) {
        double target = AsymptoticProfile::of(tri->family).slope_target;
        double prev = std::abs(observed_slope(*tri, 10) - target);
        for (int n = 11; n <= 100 && prev > 1e-12; ++n) {
            double err = std::abs(observed_slope(*tri, n) - target);
            CHECK(err < prev);
            prev = err;
        }
    }
}

TEST_CASE("gluing identity and its decomposition") {
    CHECK(verify_gluing_identity(1, 1));
    CHECK(verify_gluing_identity(2, 3));
    CHECK(fibonacci(9) == 34);
    CHECK(fibonacci(3) * fibonacci(5) + fibonacci(4) * fibonacci(6) == 34);
    CHECK(verify_gluing_identity(20, 20));
    for (int n = 1; n <= 30; ++n)
        for (int m = 1; m <= 30; ++m) CHECK(verify_gluing_identity(n, m));
}

TEST_CASE("oracle-side gluing decomposition") {
    for (int n = 1; n <= 6; ++n)
        for (int m = 1; m <= 6; ++m)
            if (n + m <= 12) CHECK(verify_gluing_identity_oracle(n, m, 14));
}

TEST_CASE("binomial Fibonacci sum") {
    CHECK(verify_binomial_fib_sum(30));
    BigInt sum = 0;
    for (int k = 1; k <= 30; ++k) sum += binomial(30 + k - 2, 30 - k);
    CHECK(sum == BigInt("956722026041"));
    CHECK(sum == fibonacci(59));
}
