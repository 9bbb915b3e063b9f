#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

#include "stripcount/counting.hpp"
#include "stripcount/numbers.hpp"
#include "stripcount/strip_model.hpp"

namespace stripcount {

inline constexpr int kDefaultOracleCellLimit = 14;

class OracleScaleError : public std::runtime_error {
  public:
    OracleScaleError(int cell_count, int limit);

    int cell_count() const { return cell_count_; }
    int limit() const { return limit_; }

  private:
    int cell_count_;
    int limit_;
};

// Exhaustive tallies of one strip's divisions, split by tail state.
// Index k-1; total[k-1] == together[k-1] + separated[k-1].
struct RefinedCounts {
    int n = 0;
    std::vector<BigInt> total;
    std::vector<BigInt> together;
    std::vector<BigInt> separated;
};

// Yields every valid division exactly once, in lexicographic order of the
// restricted-growth labels. Throws OracleScaleError when the strip exceeds
// `cell_limit` cells.
void enumerate_divisions(const Lattice& lattice,
                         const std::function<void(const Division&)>& yield,
                         int cell_limit = kDefaultOracleCellLimit);

std::vector<Division> all_divisions(const Lattice& lattice,
                                    int cell_limit = kDefaultOracleCellLimit);

RefinedCounts oracle_refined_counts(const Lattice& lattice,
                                    int cell_limit = kDefaultOracleCellLimit);

CountTriangle oracle_triangle(Family family, int n_max,
                              int cell_limit = kDefaultOracleCellLimit);

}  // namespace stripcount
