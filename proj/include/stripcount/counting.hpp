#pragma once

#include <utility>
#include <vector>

#include "stripcount/numbers.hpp"
#include "stripcount/strip_model.hpp"

namespace stripcount {

// Triangle of counts c_k(n), n = 1..n_max, k = 1..k_max(n) where
// k_max = 2n for bars and n for honeycomb strips.
struct CountTriangle {
    Family family;
    std::vector<std::vector<BigInt>> rows;  // rows[n-1][k-1]

    int n_max() const { return static_cast<int>(rows.size()); }
    int k_max(int n) const { return family == Family::ChocolateBar ? 2 * n : n; }

    // c_k(n); zero outside the triangle.
    BigInt at(int n, int k) const;

    BigInt row_sum(int n) const;

    bool operator==(const CountTriangle&) const = default;
};

// Bar triangle r_k(n) by forward iteration of the joint r/q system.
CountTriangle bar_triangle(int n_max);

// Same triangle via the two-step history recurrence in r alone (rows 1 and 2
// seeded from the joint system). Cross-check route for bar_triangle.
CountTriangle bar_triangle_two_step(int n_max);

// q_k(n): divisions with the last column split, for n = 1..n_max.
// Result [n-1][k-1], k = 1..2n; q_1(n) = 0.
std::vector<std::vector<BigInt>> bar_q_counts(int n_max);

// r(n): total bar divisions, r(n+1) = 6 r(n) + r(n-1), r(1)=2, r(2)=12.
BigInt bar_total(int n);

// Honeycomb triangle d_k(n) via d_k(n+1) = d_{k-1}(n) + 2 d_k(n) - d_k(n-1),
// with the convention d_1(0) = 1.
CountTriangle hex_triangle(int n_max);

// d_k(n) = C(n+k-2, n-k); zero out of range.
BigInt hex_closed_form(long n, long k);

// (s_k(n), t_k(n)): refined counts with the two rightmost hexagons
// separated / together. s_k(n) = C(n+k-3, n-k) for n >= 2, t_k(n) = d_k(n-1).
std::pair<BigInt, BigInt> hex_refined(int n, int k);

// d(n) = F_{2n-1}.
BigInt hex_total(int n);

}  // namespace stripcount
