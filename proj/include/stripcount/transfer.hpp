#pragma once

#include <array>

#include "stripcount/series.hpp"

namespace stripcount {

// 2x2 matrix over PolyY. Rows and columns are indexed by tail state in the
// fixed order (Together, Separated).
struct TransferMatrix2 {
    std::array<PolyY, 4> entries;  // row-major

    const PolyY& at(int row, int col) const { return entries[2 * row + col]; }
    PolyY& at(int row, int col) { return entries[2 * row + col]; }

    static TransferMatrix2 identity();
};

bool matrix_equal(const TransferMatrix2& a, const TransferMatrix2& b);

// H(y) = [[1, 1], [y, 1+y]]
TransferMatrix2 hex_matrix();

// Q(y) = [[1+y, 2+y], [y(2+y), (1+y)^2]]
TransferMatrix2 bar_matrix();

TransferMatrix2 matrix_mul(const TransferMatrix2& a, const TransferMatrix2& b);

// Binary powering; e = 0 gives the identity.
TransferMatrix2 matrix_power(const TransferMatrix2& m, unsigned long e);

// [1 1] H^{n-2} (y, y^2)^T; coefficient of y^k is d_k(n). n = 1 returns y,
// n = 2 contracts the initial vector with no matrix factor.
PolyY hex_polynomial(int n);

// [1 1] Q^{n-1} (y, y^2)^T; coefficient of y^k is r_k(n).
PolyY bar_polynomial(int n);

// H(y)^n == [[p(n), s(n)], [y s(n), p(n+1)]] with binomial-sum entries.
bool verify_h_power_closed_form(int n);

// H(1)^n == [[F_{2n-1}, F_{2n}], [F_{2n}, F_{2n+1}]].
bool verify_fib_power(int n);

// Larger root of the characteristic quadratic of the y = 1 evaluation.
double dominant_eigenvalue_at_one(const TransferMatrix2& m);

}  // namespace stripcount
