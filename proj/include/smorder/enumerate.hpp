#pragma once

#include <functional>
#include <vector>

#include "smorder/canonical.hpp"
#include "smorder/tree.hpp"

namespace smorder {

enum class EnumBackend {
    successor,   // level-sequence successor walk, filtered to one rooting per tree
    exhaustive,  // every labeled tree via Prufer sequences, deduplicated
};

// Largest n the enumeration entry points accept.  Defaults to 18; override
// with the SMORDER_CAP environment variable or set_enumeration_cap.
int enumeration_cap();
void set_enumeration_cap(int n);

// Calls fn once per isomorphism class of trees on n vertices, in ascending
// canonical-code order, passing the canonical level sequence.
void for_each_free_tree(int n, const std::function<void(const std::vector<int>&)>& fn,
                        EnumBackend backend = EnumBackend::successor);

// Canonical representatives of all trees on n vertices, ascending by code.
std::vector<Tree> free_trees(int n, EnumBackend backend = EnumBackend::successor);

// The trees on p + q vertices whose two-coloring has class sizes {p, q}.
// Requires p <= q.
std::vector<Tree> trees_with_bipartition(int p, int q,
                                         EnumBackend backend = EnumBackend::successor);

}  // namespace smorder
