#include "stripcount/transfer.hpp"

#include <cmath>
#include <stdexcept>

#include "stripcount/numbers.hpp"

namespace stripcount {

TransferMatrix2 TransferMatrix2::identity() {
    return {{PolyY{1}, PolyY{}, PolyY{}, PolyY{1}}};
}

bool matrix_equal(const TransferMatrix2& a, const TransferMatrix2& b) {
    for (int i = 0; i < 4; ++i)
        if (!poly_equal(a.entries[i], b.entries[i])) return false;
    return true;
}

TransferMatrix2 hex_matrix() {
    return {{PolyY{1}, PolyY{1}, PolyY{0, 1}, PolyY{1, 1}}};
}

TransferMatrix2 bar_matrix() {
    return {{PolyY{1, 1}, PolyY{2, 1}, PolyY{0, 2, 1}, PolyY{1, 2, 1}}};
}

TransferMatrix2 matrix_mul(const TransferMatrix2& a, const TransferMatrix2& b) {
    TransferMatrix2 out;
    for (int row = 0; row < 2; ++row)
        for (int col = 0; col < 2; ++col)
            out.at(row, col) = poly_add(poly_mul(a.at(row, 0), b.at(0, col)),
                                        poly_mul(a.at(row, 1), b.at(1, col)));
    return out;
}

TransferMatrix2 matrix_power(const TransferMatrix2& m, unsigned long e) {
    TransferMatrix2 result = TransferMatrix2::identity();
    TransferMatrix2 base = m;
    while (e > 0) {
        if (e & 1) result = matrix_mul(result, base);
        e >>= 1;
        if (e > 0) base = matrix_mul(base, base);
    }
    return result;
}

namespace {

// [1 1] M (y, y^2)^T
PolyY contract(const TransferMatrix2& m) {
    PolyY y = {0, 1};
    PolyY y2 = {0, 0, 1};
    PolyY top = poly_add(poly_mul(m.at(0, 0), y), poly_mul(m.at(0, 1), y2));
    PolyY bottom = poly_add(poly_mul(m.at(1, 0), y), poly_mul(m.at(1, 1), y2));
    return poly_add(top, bottom);
}

}  // namespace

PolyY hex_polynomial(int n) {
    if (n < 1) throw std::invalid_argument("n must be at least 1");
    if (n == 1) return {0, 1};
    return contract(matrix_power(hex_matrix(), static_cast<unsigned long>(n - 2)));
}

PolyY bar_polynomial(int n) {
    if (n < 1) throw std::invalid_argument("n must be at least 1");
    return contract(matrix_power(bar_matrix(), static_cast<unsigned long>(n - 1)));
}

bool verify_h_power_closed_form(int n) {
    if (n < 1) throw std::invalid_argument("n must be at least 1");
    auto p = [](int m) {
        PolyY out;
        for (int k = 1; k <= m; ++k) out.push_back(binomial(m + k - 2, m - k));
        return poly_trim(std::move(out));
    };
    auto s = [](int m) {
        PolyY out;
        for (int k = 1; k <= m; ++k) out.push_back(binomial(m + k - 1, m - k));
        return poly_trim(std::move(out));
    };
    TransferMatrix2 closed{{p(n), s(n), poly_mul({0, 1}, s(n)), p(n + 1)}};
    return matrix_equal(matrix_power(hex_matrix(), static_cast<unsigned long>(n)), closed);
}

bool verify_fib_power(int n) {
    if (n < 1) throw std::invalid_argument("n must be at least 1");
    TransferMatrix2 power = matrix_power(hex_matrix(), static_cast<unsigned long>(n));
    return poly_eval_at_one(power.at(0, 0)) == fibonacci(2 * n - 1) &&
           poly_eval_at_one(power.at(0, 1)) == fibonacci(2 * n) &&
           poly_eval_at_one(power.at(1, 0)) == fibonacci(2 * n) &&
           poly_eval_at_one(power.at(1, 1)) == fibonacci(2 * n + 1);
}

double dominant_eigenvalue_at_one(const TransferMatrix2& m) {
    double a = poly_eval_at_one(m.at(0, 0)).get_d();
    double b = poly_eval_at_one(m.at(0, 1)).get_d();
    double c = poly_eval_at_one(m.at(1, 0)).get_d();
    double d = poly_eval_at_one(m.at(1, 1)).get_d();
    double trace = a + d;
    double det = a * d - b * c;
    return (trace + std::sqrt(trace * trace - 4 * det)) / 2;
}

}  // namespace stripcount
