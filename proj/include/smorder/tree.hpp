#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace smorder {

// Simple undirected tree on vertices 0..n-1 with sorted adjacency lists.
struct Tree {
    int n = 0;
    std::vector<std::vector<int>> adj;

    int degree(int v) const { return static_cast<int>(adj[v].size()); }
    bool is_leaf(int v) const { return adj[v].size() == 1; }
    bool has_edge(int u, int v) const;
    std::vector<std::pair<int, int>> edges() const;  // u < v, lexicographic
};

// Builds a tree from an edge list; throws std::invalid_argument when the
// input is not a tree on exactly n vertices (bad labels, duplicate edges,
// wrong edge count, disconnected).
Tree tree_from_edges(int n, const std::vector<std::pair<int, int>>& edges);

// Two-coloring of a tree. p <= q always holds; side[v] is 0 or 1, side 0 is
// the class of size p. When p == q, side 0 is the class containing vertex 0.
struct Bipartition {
    int p = 0;
    int q = 0;
    std::vector<std::uint8_t> side;
};

Bipartition bipartition(const Tree& t);

// Path distance between two vertices (BFS).
int distance(const Tree& t, int u, int v);

// All distances from u.
std::vector<int> distances_from(const Tree& t, int u);

// The one or two middle vertices of the tree (leaf stripping).
std::vector<int> center(const Tree& t);

}  // namespace smorder
