#pragma once

#include <vector>

#include "stripcount/numbers.hpp"

namespace stripcount {

// Polynomial in y, dense big-integer coefficients, index = power of y.
// Normal form has no trailing zeros (the zero polynomial is empty).
using PolyY = std::vector<BigInt>;

PolyY poly_trim(PolyY p);
PolyY poly_add(const PolyY& a, const PolyY& b);
PolyY poly_sub(const PolyY& a, const PolyY& b);
PolyY poly_mul(const PolyY& a, const PolyY& b);
BigInt poly_eval_at_one(const PolyY& p);
bool poly_equal(const PolyY& a, const PolyY& b);

// Truncated series in x with PolyY coefficients; terms[m] is the coefficient
// of x^m, m = 0..order.
struct SeriesXY {
    std::vector<PolyY> terms;

    int order() const { return static_cast<int>(terms.size()) - 1; }
};

// Bivariate rational function num/den, both polynomials in x over PolyY.
// The denominator's x^0 y^0 coefficient must be 1.
struct RationalGF {
    std::vector<PolyY> numerator;
    std::vector<PolyY> denominator;
};

// Univariate specialization (y evaluated away).
struct RationalGF1 {
    std::vector<BigInt> numerator;
    std::vector<BigInt> denominator;
};

// Power-series expansion: a_m = num_m - sum_{j>=1} den_j * a_{m-j}.
SeriesXY expand_rational(const RationalGF& gf, int order);

std::vector<BigInt> expand_univariate(const RationalGF1& gf, int order);

// F(x,y) = xy(1-x+y+xy) / (1-(2+3y+y^2)x-(y^2+y-1)x^2)
RationalGF bar_gf();

// G(x,y) = xy(1+x(y-1)-xy) / (1-(2+y)x+x^2)
RationalGF hex_gf();

// Coefficient-wise evaluation of numerator and denominator at y = 1.
RationalGF1 specialize_y_at_one(const RationalGF& gf);

}  // namespace stripcount
