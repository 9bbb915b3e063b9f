#include <doctest.h>

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "stripcount/strip_model.hpp"

using namespace stripcount;

namespace {

// 1-based edge list of a graph, for direct comparison with the figures.
std::set<std::pair<int, int>> edges(const CellGraph& g) {
    std::set<std::pair<int, int>> out;
    for (int c = 0; c < g.cell_count(); ++c)
        for (int nb : g.neighbors(c))
            out.insert({std::min(c, nb) + 1, std::max(c, nb) + 1});
    return out;
}

}  // namespace

TEST_CASE("honeycomb adjacency is the square of a path") {
    CellGraph g({Family::Honeycomb, 4});
    CHECK(edges(g) == std::set<std::pair<int, int>>{
                          {1, 2}, {2, 3}, {3, 4}, {1, 3}, {2, 4}});

    // independent construction: distance <= 2 closure of the path
    for (int n : {1, 2, 5, 9}) {
        CellGraph h({Family::Honeycomb, n});
        std::set<std::pair<int, int>> expected;
        for (int a = 1; a <= n; ++a)
            for (int b = a + 1; b <= n && b <= a + 2; ++b) expected.insert({a, b});
        CHECK(edges(h) == expected);
    }
}

TEST_CASE("bar adjacency matches the ladder graph") {
    CHECK(edges(CellGraph({Family::ChocolateBar, 1})) ==
          std::set<std::pair<int, int>>{{1, 2}});
    CHECK(edges(CellGraph({Family::ChocolateBar, 2})) ==
          std::set<std::pair<int, int>>{{1, 2}, {3, 4}, {1, 3}, {2, 4}});
}

TEST_CASE("length zero is rejected") {
    CHECK_THROWS_AS(CellGraph({Family::Honeycomb, 0}), std::invalid_argument);
    CHECK_THROWS_AS(CellGraph({Family::ChocolateBar, 0}), std::invalid_argument);
}

TEST_CASE("validity checks connectivity per part") {
    CellGraph hex4({Family::Honeycomb, 4});
    CHECK_FALSE(is_valid_division(hex4, std::vector{0, 1, 1, 0}));  // {14,23}
    CHECK(is_valid_division(hex4, std::vector{0, 0, 0, 0}));
}

TEST_CASE("validity rejects a length mismatch") {
    CellGraph hex4({Family::Honeycomb, 4});
    CHECK_THROWS_AS(is_valid_division(hex4, std::vector{0, 1, 1}), std::invalid_argument);
}

TEST_CASE("bar divisions from the r_2(2) listing are valid") {
    CellGraph bar2({Family::ChocolateBar, 2});
    CHECK(is_valid_division(bar2, std::vector{0, 1, 1, 1}));
    CHECK(is_valid_division(bar2, std::vector{0, 1, 0, 1}));
}

TEST_CASE("canonicalize relabels in first-occurrence order") {
    CHECK(canonicalize(std::vector{2, 2, 5, 7}).labels == std::vector{0, 0, 1, 2});
    CHECK(canonicalize(std::vector{0, 1, 0, 1}).labels == std::vector{0, 1, 0, 1});
    CHECK(canonicalize(std::vector{1, 0, 0, 1}).labels == std::vector{0, 1, 1, 0});
}

TEST_CASE("canonicalize is idempotent and fixes exactly the RGS strings") {
    std::vector<std::vector<int>> samples = {
        {0}, {0, 0, 1}, {0, 1, 2, 1}, {3, 3, 1}, {0, 2}, {1, 0}};
    for (const auto& labels : samples) {
        Division once = canonicalize(labels);
        CHECK(canonicalize(once.labels) == once);
        CHECK(is_restricted_growth(once.labels));
        if (is_restricted_growth(labels)) CHECK(once.labels == labels);
        if (!is_restricted_growth(labels)) CHECK(once.labels != labels);
    }
}

TEST_CASE("tail state splits on the two rightmost cells") {
    CellGraph hex4({Family::Honeycomb, 4});
    CHECK(tail_state(hex4, canonicalize(std::vector{0, 1, 1, 1})) == TailState::Together);
    CHECK(tail_state(hex4, canonicalize(std::vector{0, 0, 0, 1})) == TailState::Separated);

    // division of the 2x5 figure: one spanning part plus a split last column
    CellGraph bar5({Family::ChocolateBar, 5});
    std::vector<int> figure = {0, 0, 1, 0, 0, 0, 2, 0, 2, 3};
    REQUIRE(is_valid_division(bar5, figure));
    CHECK(tail_state(bar5, canonicalize(figure)) == TailState::Separated);
}

TEST_CASE("division text form matches the listing style") {
    CHECK(division_text(canonicalize(std::vector{0, 1, 0, 1})) == "13,24");
    CHECK(division_text(canonicalize(std::vector{0, 1, 1, 1})) == "1,234");
    CHECK(division_text(canonicalize(std::vector{0, 0, 0, 0})) == "1234");
}
