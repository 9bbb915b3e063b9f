#include "stripcount/io.hpp"

#include <sstream>

namespace stripcount {

std::string triangle_text(const CountTriangle& triangle) {
    std::ostringstream out;
    for (int n = 1; n <= triangle.n_max(); ++n) {
        out << n << ':';
        for (const BigInt& value : triangle.rows[n - 1]) out << ' ' << value.get_str();
        out << '\n';
    }
    return out.str();
}

std::string triangle_csv(const CountTriangle& triangle) {
    std::ostringstream out;
    out << "n,k,count\n";
    for (int n = 1; n <= triangle.n_max(); ++n)
        for (int k = 1; k <= triangle.k_max(n); ++k)
            out << n << ',' << k << ',' << triangle.rows[n - 1][k - 1].get_str() << '\n';
    return out.str();
}

std::string triangle_json(const CountTriangle& triangle) {
    std::ostringstream out;
    out << '[';
    for (int n = 1; n <= triangle.n_max(); ++n) {
        if (n > 1) out << ',';
        out << '[';
        for (int k = 1; k <= triangle.k_max(n); ++k) {
            if (k > 1) out << ',';
            out << '"' << triangle.rows[n - 1][k - 1].get_str() << '"';
        }
        out << ']';
    }
    out << "]\n";
    return out.str();
}

std::string triangle_bfile(const CountTriangle& triangle) {
    std::ostringstream out;
    out << "# family=" << family_name(triangle.family) << " n_max=" << triangle.n_max()
        << '\n';
    long index = 1;
    for (int n = 1; n <= triangle.n_max(); ++n)
        for (int k = 1; k <= triangle.k_max(n); ++k)
            out << index++ << ' ' << triangle.rows[n - 1][k - 1].get_str() << '\n';
    return out.str();
}

std::string series_dump(const SeriesXY& series) {
    std::ostringstream out;
    for (int m = 1; m <= series.order(); ++m) {
        out << m << ':';
        const PolyY& p = series.terms[m];
        for (size_t i = 1; i < p.size(); ++i) out << ' ' << p[i].get_str();
        out << '\n';
    }
    return out.str();
}

CountTriangle triangle_from_csv(Family family, const std::string& csv) {
    std::istringstream in(csv);
    std::string line;
    if (!std::getline(in, line) || line != "n,k,count")
        throw std::invalid_argument("triangle CSV must start with 'n,k,count'");

    CountTriangle triangle{family, {}};
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        size_t c1 = line.find(','), c2 = line.find(',', c1 + 1);
        if (c1 == std::string::npos || c2 == std::string::npos)
            throw std::invalid_argument("malformed triangle CSV row: " + line);
        int n = std::stoi(line.substr(0, c1));
        int k = std::stoi(line.substr(c1 + 1, c2 - c1 - 1));
        if (n == triangle.n_max() + 1 && k == 1)
            triangle.rows.emplace_back();
        if (n != triangle.n_max() || k != static_cast<int>(triangle.rows.back().size()) + 1)
            throw std::invalid_argument("triangle CSV rows out of order at: " + line);
        triangle.rows.back().emplace_back(line.substr(c2 + 1));
    }
    for (int n = 1; n <= triangle.n_max(); ++n)
        if (static_cast<int>(triangle.rows[n - 1].size()) != triangle.k_max(n))
            throw std::invalid_argument("triangle CSV row has wrong width");
    return triangle;
}

}  // namespace stripcount
