#include "stripcount/series.hpp"

#include <stdexcept>

namespace stripcount {

PolyY poly_trim(PolyY p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

PolyY poly_add(const PolyY& a, const PolyY& b) {
    PolyY out(std::max(a.size(), b.size()), BigInt(0));
    for (size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    return poly_trim(std::move(out));
}

PolyY poly_sub(const PolyY& a, const PolyY& b) {
    PolyY out(std::max(a.size(), b.size()), BigInt(0));
    for (size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
    return poly_trim(std::move(out));
}

PolyY poly_mul(const PolyY& a, const PolyY& b) {
    if (a.empty() || b.empty()) return {};
    PolyY out(a.size() + b.size() - 1, BigInt(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return poly_trim(std::move(out));
}

BigInt poly_eval_at_one(const PolyY& p) {
    BigInt sum = 0;
    for (const BigInt& c : p) sum += c;
    return sum;
}

bool poly_equal(const PolyY& a, const PolyY& b) {
    return poly_trim(a) == poly_trim(b);
}

SeriesXY expand_rational(const RationalGF& gf, int order) {
    if (order < 0) throw std::invalid_argument("order must be non-negative");
    if (gf.denominator.empty() || !poly_equal(gf.denominator[0], {1}))
        throw std::invalid_argument("denominator constant term must be 1");

    SeriesXY series;
    series.terms.resize(order + 1);
    for (int m = 0; m <= order; ++m) {
        PolyY term = m < static_cast<int>(gf.numerator.size()) ? gf.numerator[m] : PolyY{};
        for (size_t j = 1; j < gf.denominator.size() && static_cast<int>(j) <= m; ++j)
            term = poly_sub(term, poly_mul(gf.denominator[j], series.terms[m - j]));
        series.terms[m] = poly_trim(std::move(term));
    }
    return series;
}

std::vector<BigInt> expand_univariate(const RationalGF1& gf, int order) {
    if (order < 0) throw std::invalid_argument("order must be non-negative");
    if (gf.denominator.empty() || gf.denominator[0] != 1)
        throw std::invalid_argument("denominator constant term must be 1");

    std::vector<BigInt> a(order + 1, BigInt(0));
    for (int m = 0; m <= order; ++m) {
        BigInt term = m < static_cast<int>(gf.numerator.size()) ? gf.numerator[m] : BigInt(0);
        for (size_t j = 1; j < gf.denominator.size() && static_cast<int>(j) <= m; ++j)
            term -= gf.denominator[j] * a[m - j];
        a[m] = std::move(term);
    }
    return a;
}

RationalGF bar_gf() {
    // xy(1-x+y+xy) = x(y+y^2) + x^2(-y+y^2)
    // 1 - (2+3y+y^2)x - (y^2+y-1)x^2
    return {
        {{}, {0, 1, 1}, {0, -1, 1}},
        {{1}, {-2, -3, -1}, {1, -1, -1}},
    };
}

RationalGF hex_gf() {
    // xy(1+x(y-1)-xy) = xy - x^2 y
    // 1 - (2+y)x + x^2
    return {
        {{}, {0, 1}, {0, -1}},
        {{1}, {-2, -1}, {1}},
    };
}

RationalGF1 specialize_y_at_one(const RationalGF& gf) {
    RationalGF1 out;
    for (const PolyY& p : gf.numerator) out.numerator.push_back(poly_eval_at_one(p));
    for (const PolyY& p : gf.denominator) out.denominator.push_back(poly_eval_at_one(p));
    return out;
}

}  // namespace stripcount
