#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace stripcount {

enum class Family { ChocolateBar, Honeycomb };

const char* family_name(Family family);  // "bar" / "hex"

// A strip of a given family. For bars `length` is the number of columns
// (2*length cells); for honeycomb strips it is the number of hexagons.
struct Lattice {
    Family family;
    int length;

    int cell_count() const {
        return family == Family::ChocolateBar ? 2 * length : length;
    }
};

// Inner dual graph of a strip. Cells are 0-based internally; the 1-based
// numbering of the figures appears only in text I/O.
//
// Bar cells: 2i and 2i+1 are the bottom/top squares of column i.
// Honeycomb cells: cell i is adjacent to i-1, i-2, i+1, i+2 (the square of
// a path).
class CellGraph {
  public:
    explicit CellGraph(const Lattice& lattice);

    const Lattice& lattice() const { return lattice_; }
    int cell_count() const { return static_cast<int>(adjacency_.size()); }
    const std::vector<int>& neighbors(int cell) const { return adjacency_.at(cell); }

    // The two rightmost cells (last column for bars). Requires >= 2 cells.
    std::pair<int, int> tail_cells() const;

  private:
    Lattice lattice_;
    std::vector<std::vector<int>> adjacency_;
};

// A division in restricted-growth form: labels[0] == 0 and each label is at
// most 1 + max of the preceding ones. Part ids are exactly 0..part_count-1.
struct Division {
    std::vector<int> labels;
    int part_count = 0;

    bool operator==(const Division&) const = default;
};

enum class TailState { Together, Separated };

// True iff every label class induces a connected subgraph of `graph`.
// Throws std::invalid_argument on a length mismatch.
bool is_valid_division(const CellGraph& graph, std::span<const int> labels);

// Relabels into restricted-growth form (first-occurrence order). Idempotent.
Division canonicalize(std::span<const int> labels);

bool is_restricted_growth(std::span<const int> labels);

// Together iff the two tail cells share a part id. Requires >= 2 cells.
TailState tail_state(const CellGraph& graph, const Division& division);

// Paper-style text form: blocks of concatenated 1-based cell ids, ordered by
// least element, e.g. "13,24" or "1,234".
std::string division_text(const Division& division);

}  // namespace stripcount
