#pragma once

#include <string>

#include "stripcount/counting.hpp"
#include "stripcount/series.hpp"

namespace stripcount {

// "n: c_1 c_2 ... c_k" per row.
std::string triangle_text(const CountTriangle& triangle);

// Header "n,k,count", then one data row per entry, row-major.
std::string triangle_csv(const CountTriangle& triangle);

// JSON array of rows; counts as decimal strings (they outgrow doubles fast).
std::string triangle_json(const CountTriangle& triangle);

// OEIS b-file: "# family=<f> n_max=<N>" then "i v" lines, row-major from 1.
std::string triangle_bfile(const CountTriangle& triangle);

// "n: c_1 c_2 ... c_k" per x-power, skipping the constant term.
std::string series_dump(const SeriesXY& series);

// Inverse of triangle_csv; throws std::invalid_argument on malformed input.
CountTriangle triangle_from_csv(Family family, const std::string& csv);

}  // namespace stripcount
