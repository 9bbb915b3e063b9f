#include "stripcount/oracle.hpp"

#include <algorithm>
#include <string>

namespace stripcount {
namespace {

// Depth-first search over restricted-growth strings with connectivity
// pruning. A block is closed at step i once no member cell has a neighbor
// beyond i; a closed block with more than one union-find component cannot be
// repaired and the branch is abandoned.
class Enumerator {
  public:
    Enumerator(const CellGraph& graph, const std::function<void(const Division&)>& yield)
        : graph_(graph), yield_(yield), cells_(graph.cell_count()) {
        labels_.assign(cells_, -1);
        parent_.resize(cells_);
        reach_.resize(cells_);
        for (int c = 0; c < cells_; ++c) {
            reach_[c] = c;
            for (int nb : graph.neighbors(c)) reach_[c] = std::max(reach_[c], nb);
        }
        block_reach_.reserve(cells_);
        block_components_.reserve(cells_);
    }

    void run() { descend(0); }

  private:
    int find(int c) {
        while (parent_[c] != c) c = parent_[c];
        return c;
    }

    void descend(int cell) {
        if (cell == cells_) {
            emit();
            return;
        }
        int block_count = static_cast<int>(block_reach_.size());
        for (int label = 0; label <= block_count && label < cells_; ++label) {
            parent_[cell] = cell;
            labels_[cell] = label;

            int saved_reach = 0;
            if (label == block_count) {
                block_reach_.push_back(reach_[cell]);
                block_components_.push_back(1);
            } else {
                saved_reach = block_reach_[label];
                block_reach_[label] = std::max(block_reach_[label], reach_[cell]);
                block_components_[label] += 1;
            }

            int merged_roots[4];
            int merged = 0;
            for (int nb : graph_.neighbors(cell)) {
                if (nb >= cell || labels_[nb] != label) continue;
                int root = find(nb);
                if (root != cell) {
                    parent_[root] = cell;  // cell stays its own root
                    merged_roots[merged++] = root;
                    block_components_[label] -= 1;
                }
            }

            if (no_block_closed_broken(cell)) descend(cell + 1);

            // rollback
            for (int r = 0; r < merged; ++r) parent_[merged_roots[r]] = merged_roots[r];
            block_components_[label] += merged;
            if (label == block_count) {
                block_reach_.pop_back();
                block_components_.pop_back();
            } else {
                block_reach_[label] = saved_reach;
                block_components_[label] -= 1;
            }
            labels_[cell] = -1;
        }
    }

    bool no_block_closed_broken(int cell) const {
        for (size_t b = 0; b < block_reach_.size(); ++b)
            if (block_reach_[b] <= cell && block_components_[b] != 1) return false;
        return true;
    }

    void emit() {
        Division division{labels_, static_cast<int>(block_reach_.size())};
        // independent re-check, pruning logic not trusted for ground truth
        if (!is_valid_division(graph_, division.labels))
            throw std::logic_error("oracle produced a disconnected division");
        yield_(division);
    }

    const CellGraph& graph_;
    const std::function<void(const Division&)>& yield_;
    int cells_;
    std::vector<int> labels_;
    std::vector<int> parent_;
    std::vector<int> reach_;            // per cell: max(cell, neighbors)
    std::vector<int> block_reach_;      // per block: max reach of members
    std::vector<int> block_components_; // per block: union-find components
};

}  // namespace

OracleScaleError::OracleScaleError(int cell_count, int limit)
    : std::runtime_error("oracle scale: strip has " + std::to_string(cell_count) +
                         " cells, limit is " + std::to_string(limit)),
      cell_count_(cell_count),
      limit_(limit) {}

void enumerate_divisions(const Lattice& lattice,
                         const std::function<void(const Division&)>& yield,
                         int cell_limit) {
    if (lattice.cell_count() > cell_limit)
        throw OracleScaleError(lattice.cell_count(), cell_limit);
    CellGraph graph(lattice);
    Enumerator(graph, yield).run();
}

std::vector<Division> all_divisions(const Lattice& lattice, int cell_limit) {
    std::vector<Division> out;
    enumerate_divisions(lattice, [&](const Division& d) { out.push_back(d); },
                        cell_limit);
    return out;
}

RefinedCounts oracle_refined_counts(const Lattice& lattice, int cell_limit) {
    CellGraph graph(lattice);
    int m = lattice.cell_count();

    RefinedCounts counts;
    counts.n = lattice.length;
    counts.total.assign(m, 0);
    counts.together.assign(m, 0);
    counts.separated.assign(m, 0);

    enumerate_divisions(
        lattice,
        [&](const Division& d) {
            counts.total[d.part_count - 1] += 1;
            if (m >= 2) {
                if (tail_state(graph, d) == TailState::Together)
                    counts.together[d.part_count - 1] += 1;
                else
                    counts.separated[d.part_count - 1] += 1;
            }
        },
        cell_limit);
    return counts;
}

CountTriangle oracle_triangle(Family family, int n_max, int cell_limit) {
    CountTriangle triangle{family, {}};
    for (int n = 1; n <= n_max; ++n) {
        RefinedCounts counts = oracle_refined_counts({family, n}, cell_limit);
        triangle.rows.push_back(counts.total);
    }
    return triangle;
}

}  // namespace stripcount
