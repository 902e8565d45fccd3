#include <doctest.h>

#include <stdexcept>
#include <string>
#include <vector>

#include "smorder/canonical.hpp"
#include "smorder/enumerate.hpp"
#include "smorder/graph6.hpp"
#include "smorder/tree.hpp"

using namespace smorder;

TEST_CASE("known encodings") {
    CHECK(to_graph6(tree_from_edges(2, {{0, 1}})) == "A_");
    CHECK(to_graph6(tree_from_edges(1, {})) == "@");
    CHECK(to_graph6(tree_from_edges(4, {{0, 1}, {1, 2}, {2, 3}})) == "Ch");
    CHECK(to_graph6(tree_from_edges(4, {{0, 1}, {0, 2}, {0, 3}})) == "Cs");
}

TEST_CASE("parsing preserves labels exactly") {
    Tree t = tree_from_edges(7, {{0, 3}, {3, 1}, {3, 5}, {5, 2}, {5, 4}, {4, 6}});
    Tree back = tree_from_graph6(to_graph6(t));
    CHECK(back.n == t.n);
    CHECK(back.edges() == t.edges());
}

TEST_CASE("round trip over every enumerated tree") {
    for (int n = 1; n <= 10; ++n)
        for (const auto& t : free_trees(n)) {
            Tree back = tree_from_graph6(to_graph6(t));
            CHECK(back.edges() == t.edges());
            CHECK(isomorphic(back, t));
        }
}

TEST_CASE("non-trees and malformed strings are rejected") {
    // 4-cycle: n=4 with edges 01,12,23,03
    CHECK_THROWS_AS(tree_from_graph6("Cl"), std::invalid_argument);
    // two vertices, no edge
    CHECK_THROWS_AS(tree_from_graph6("A?"), std::invalid_argument);
    CHECK_THROWS_AS(tree_from_graph6(""), std::invalid_argument);
    // byte outside the printable graph6 alphabet
    CHECK_THROWS_AS(tree_from_graph6(std::string("C") + char(31)), std::invalid_argument);
    // truncated adjacency bits
    CHECK_THROWS_AS(tree_from_graph6("F"), std::invalid_argument);
}

TEST_CASE("encoding grows with order but stays linear in characters") {
    // one byte of header below 63 vertices, six adjacency bits per char
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i < 20; ++i) e.emplace_back(0, i);
    Tree t = tree_from_edges(20, e);
    auto s = to_graph6(t);
    CHECK(s.size() == 1 + (20 * 19 / 2 + 5) / 6);
    CHECK(tree_from_graph6(s).edges() == t.edges());
}
