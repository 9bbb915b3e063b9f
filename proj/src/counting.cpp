#include "stripcount/counting.hpp"

#include <stdexcept>

namespace stripcount {

BigInt CountTriangle::at(int n, int k) const {
    if (n < 1 || n > n_max() || k < 1 || k > k_max(n)) return 0;
    return rows[n - 1][k - 1];
}

BigInt CountTriangle::row_sum(int n) const {
    BigInt sum = 0;
    for (const BigInt& value : rows.at(n - 1)) sum += value;
    return sum;
}

namespace {

// Joint forward iteration of r_k(n+1) = r_k(n) + 3 r_{k-1}(n) + r_{k-2}(n)
// + 2 q_k(n) and q_k(n+1) = 2 r_{k-1}(n) + r_{k-2}(n) + q_k(n), from
// r_1(1) = r_2(1) = 1, q_2(1) = 1.
void iterate_brown(int n_max, std::vector<std::vector<BigInt>>* r_rows,
                   std::vector<std::vector<BigInt>>* q_rows) {
    std::vector<BigInt> r = {1, 1};      // index k-1, row n=1
    std::vector<BigInt> q = {0, 1};
    auto get = [](const std::vector<BigInt>& row, int k) -> BigInt {
        return (k < 1 || k > static_cast<int>(row.size())) ? BigInt(0) : row[k - 1];
    };
    for (int n = 1; n <= n_max; ++n) {
        if (r_rows) r_rows->push_back(r);
        if (q_rows) q_rows->push_back(q);
        if (n == n_max) break;
        std::vector<BigInt> r_next(2 * (n + 1));
        std::vector<BigInt> q_next(2 * (n + 1));
        for (int k = 1; k <= 2 * (n + 1); ++k) {
            r_next[k - 1] = get(r, k) + 3 * get(r, k - 1) + get(r, k - 2) + 2 * get(q, k);
            q_next[k - 1] = 2 * get(r, k - 1) + get(r, k - 2) + get(q, k);
        }
        r = std::move(r_next);
        q = std::move(q_next);
    }
}

}  // namespace

CountTriangle bar_triangle(int n_max) {
    if (n_max < 1) throw std::invalid_argument("n_max must be at least 1");
    CountTriangle triangle{Family::ChocolateBar, {}};
    iterate_brown(n_max, &triangle.rows, nullptr);
    return triangle;
}

std::vector<std::vector<BigInt>> bar_q_counts(int n_max) {
    if (n_max < 1) throw std::invalid_argument("n_max must be at least 1");
    std::vector<std::vector<BigInt>> q_rows;
    iterate_brown(n_max, nullptr, &q_rows);
    return q_rows;
}

CountTriangle bar_triangle_two_step(int n_max) {
    if (n_max < 1) throw std::invalid_argument("n_max must be at least 1");
    // rows 1 and 2 seeded from the joint system; the two-row recurrence
    // r_k(n+1) = r_{k-2}(n) + 3 r_{k-1}(n) + 2 r_k(n)
    //          + r_{k-2}(n-1) + r_{k-1}(n-1) - r_k(n-1) takes over from there
    CountTriangle triangle = bar_triangle(std::min(n_max, 2));
    for (int n = 2; n < n_max; ++n) {
        std::vector<BigInt> next(2 * (n + 1));
        for (int k = 1; k <= 2 * (n + 1); ++k) {
            next[k - 1] = triangle.at(n, k - 2) + 3 * triangle.at(n, k - 1) +
                          2 * triangle.at(n, k) + triangle.at(n - 1, k - 2) +
                          triangle.at(n - 1, k - 1) - triangle.at(n - 1, k);
        }
        triangle.rows.push_back(std::move(next));
    }
    return triangle;
}

BigInt bar_total(int n) {
    if (n < 1) throw std::invalid_argument("n must be at least 1");
    BigInt prev = 2, current = 12;  // r(1), r(2)
    if (n == 1) return prev;
    for (int i = 2; i < n; ++i) {
        BigInt next = 6 * current + prev;
        prev = std::move(current);
        current = std::move(next);
    }
    return current;
}

CountTriangle hex_triangle(int n_max) {
    if (n_max < 1) throw std::invalid_argument("n_max must be at least 1");
    CountTriangle triangle{Family::Honeycomb, {}};
    triangle.rows.push_back({BigInt(1)});
    auto d = [&](int n, int k) -> BigInt {
        if (n == 0) return k == 1 ? 1 : 0;  // d_1(0) = 1 convention
        return triangle.at(n, k);
    };
    for (int n = 1; n < n_max; ++n) {
        std::vector<BigInt> next(n + 1);
        for (int k = 1; k <= n + 1; ++k)
            next[k - 1] = d(n, k - 1) + 2 * d(n, k) - d(n - 1, k);
        triangle.rows.push_back(std::move(next));
    }
    return triangle;
}

BigInt hex_closed_form(long n, long k) {
    if (n < 1 || k < 1 || k > n) return 0;
    return binomial(n + k - 2, n - k);
}

std::pair<BigInt, BigInt> hex_refined(int n, int k) {
    if (n < 1) throw std::invalid_argument("n must be at least 1");
    BigInt s = (n >= 2 && k >= 1 && k <= n) ? binomial(n + k - 3, n - k) : 0;
    BigInt t = n == 1 ? (k == 1 ? 1 : 0) : hex_closed_form(n - 1, k);
    return {s, t};
}

BigInt hex_total(int n) {
    if (n < 1) throw std::invalid_argument("n must be at least 1");
    return fibonacci(2 * n - 1);
}

}  // namespace stripcount
