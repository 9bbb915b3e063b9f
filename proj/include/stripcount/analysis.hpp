#pragma once

#include <vector>

#include "stripcount/counting.hpp"
#include "stripcount/numbers.hpp"

namespace stripcount {

// Exact interpolating polynomial of a triangle column or diagonal.
// Coefficients are rationals in ascending powers of n; evaluation inside the
// fitted range reproduces the triangle entries exactly, and extrapolation
// beyond it is the polynomiality test.
struct ColumnPolynomial {
    int index = 0;  // k for columns, j for diagonals
    std::vector<BigRat> coefficients;
    int fit_lo = 0;
    int fit_hi = 0;

    int degree() const;
    BigRat leading_coefficient() const;
    BigRat eval(long n) const;
};

// Alternating binomial convolution of order 2k-1 (checked for 2k <= n <= n_max):
// sum_{j=0}^{2k-1} (-1)^j C(2k-1, j) c_k(n-j) == 0.
bool check_column_recurrence(const CountTriangle& triangle, int k, int n_max);

// Newton interpolation of column k on rows n = k..3k-2 (degree <= 2k-2).
ColumnPolynomial fit_column(const CountTriangle& triangle, int k);

// Newton interpolation of the bar diagonal r_{2n-j}(n) on n = j+1..2j+1
// (degree <= j); leading coefficient must be 3^j / j!.
ColumnPolynomial fit_diagonal(const CountTriangle& bar, int j);

// E(n) = sum_k k c_k(n) / sum_k c_k(n), exact.
BigRat expected_parts(const CountTriangle& triangle, int n);

// E(n+1) - E(n) as a float; needs rows n and n+1.
double observed_slope(const CountTriangle& triangle, int n);

// Hard-coded asymptotic targets per family.
struct AsymptoticProfile {
    Family family;
    double slope_target;   // bar: 3/2 - sqrt(2/5); hex: 1/sqrt(5)
    double growth_target;  // bar: 3 + sqrt(10);    hex: (3 + sqrt(5))/2

    static AsymptoticProfile of(Family family);
};

// F_{2n+2m-1} == F_{2n-1} F_{2m-1} + F_{2n} F_{2m}, and the counting-side
// decomposition d(n+m) == d(n)d(m) + 4s(n)s(m) + t(n)t(m) + 2s(n)t(m)
// + 2t(n)s(m) with d(n)=F_{2n-1}, s(n)=F_{2n-2}, t(n)=F_{2n-3} (t(1)=1).
bool verify_gluing_identity(int n, int m);

// Same decomposition with s(n), t(n), d(n) tallied by the oracle instead of
// substituted Fibonacci values; n + m must stay within oracle scale.
bool verify_gluing_identity_oracle(int n, int m, int cell_limit);

// sum_{k=1}^{n} C(n+k-2, n-k) == F_{2n-1} for every n <= n_max.
bool verify_binomial_fib_sum(int n_max);

}  // namespace stripcount
