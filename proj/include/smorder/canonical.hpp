#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "smorder/tree.hpp"

namespace smorder {

// Canonical name of an unlabeled tree: the level sequence of the tree rooted
// at a center, children ordered so the sequence is lexicographically maximal;
// for a bicentral tree the smaller of the two center rootings wins.  Equal
// codes <=> isomorphic trees.
struct CanonicalCode {
    std::vector<int> levels;  // preorder levels, levels[0] == 0

    auto operator<=>(const CanonicalCode&) const = default;

    // Nested-parenthesis rendering, one "(...)" per vertex.
    std::string to_string() const;
};

CanonicalCode canonical_code(const Tree& t);

// Canonical rooted level sequence of the subtree hanging off v away from
// parent (pass parent = -1 for the whole tree rooted at v).
std::vector<int> rooted_code(const Tree& t, int v, int parent, int level = 0);

// Rebuilds the tree named by a level sequence; vertex labels follow preorder,
// so the result of canonical_code(canonical_form(c)) is c again.
Tree tree_from_level_sequence(const std::vector<int>& levels);

inline Tree canonical_form(const Tree& t) {
    return tree_from_level_sequence(canonical_code(t).levels);
}

bool isomorphic(const Tree& a, const Tree& b);

// Order of the automorphism group.  Fits in 64 bits for every tree this
// library enumerates (the star on n vertices gives (n-1)!).
std::uint64_t aut_size(const Tree& t);

}  // namespace smorder
