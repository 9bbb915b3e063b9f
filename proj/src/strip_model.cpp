#include "stripcount/strip_model.hpp"

#include <algorithm>

namespace stripcount {

const char* family_name(Family family) {
    return family == Family::ChocolateBar ? "bar" : "hex";
}

CellGraph::CellGraph(const Lattice& lattice) : lattice_(lattice) {
    if (lattice.length < 1)
        throw std::invalid_argument("strip length must be at least 1");

    int m = lattice.cell_count();
    adjacency_.resize(m);
    auto link = [&](int a, int b) {
        adjacency_[a].push_back(b);
        adjacency_[b].push_back(a);
    };

    if (lattice.family == Family::ChocolateBar) {
        for (int col = 0; col < lattice.length; ++col) {
            link(2 * col, 2 * col + 1);
            if (col + 1 < lattice.length) {
                link(2 * col, 2 * col + 2);
                link(2 * col + 1, 2 * col + 3);
            }
        }
    } else {
        for (int i = 0; i < m; ++i) {
            if (i + 1 < m) link(i, i + 1);
            if (i + 2 < m) link(i, i + 2);
        }
    }
    for (auto& adj : adjacency_) std::sort(adj.begin(), adj.end());
}

std::pair<int, int> CellGraph::tail_cells() const {
    int m = cell_count();
    if (m < 2) throw std::invalid_argument("tail cells need at least 2 cells");
    // Last column for bars, last two hexagons otherwise: the top two indices
    // under both numberings.
    return {m - 2, m - 1};
}

bool is_valid_division(const CellGraph& graph, std::span<const int> labels) {
    int m = graph.cell_count();
    if (static_cast<int>(labels.size()) != m)
        throw std::invalid_argument("label array does not match cell count");

    std::vector<char> seen_label(m, 0);
    std::vector<char> visited(m, 0);
    std::vector<int> stack;
    for (int start = 0; start < m; ++start) {
        int part = labels[start];
        if (part < 0 || part >= m) return false;
        if (seen_label[part]) {
            if (!visited[start]) return false;  // second component of a part
            continue;
        }
        seen_label[part] = 1;
        // flood the part from its first cell
        stack.assign(1, start);
        visited[start] = 1;
        while (!stack.empty()) {
            int cell = stack.back();
            stack.pop_back();
            for (int next : graph.neighbors(cell)) {
                if (!visited[next] && labels[next] == part) {
                    visited[next] = 1;
                    stack.push_back(next);
                }
            }
        }
    }
    return true;
}

Division canonicalize(std::span<const int> labels) {
    Division result;
    result.labels.resize(labels.size());
    std::vector<int> rename;
    for (size_t i = 0; i < labels.size(); ++i) {
        int seen = -1;
        for (size_t j = 0; j < rename.size(); ++j)
            if (rename[j] == labels[i]) { seen = static_cast<int>(j); break; }
        if (seen < 0) {
            seen = static_cast<int>(rename.size());
            rename.push_back(labels[i]);
        }
        result.labels[i] = seen;
    }
    result.part_count = static_cast<int>(rename.size());
    return result;
}

bool is_restricted_growth(std::span<const int> labels) {
    int max_label = -1;
    for (int label : labels) {
        if (label < 0 || label > max_label + 1) return false;
        max_label = std::max(max_label, label);
    }
    return true;
}

TailState tail_state(const CellGraph& graph, const Division& division) {
    auto [a, b] = graph.tail_cells();
    return division.labels.at(a) == division.labels.at(b) ? TailState::Together
                                                          : TailState::Separated;
}

std::string division_text(const Division& division) {
    std::string out;
    for (int part = 0; part < division.part_count; ++part) {
        if (part > 0) out += ',';
        for (size_t cell = 0; cell < division.labels.size(); ++cell)
            if (division.labels[cell] == part) out += std::to_string(cell + 1);
    }
    return out;
}

}  // namespace stripcount
