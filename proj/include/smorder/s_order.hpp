#pragma once

#include <cstddef>
#include <vector>

#include "smorder/canonical.hpp"
#include "smorder/moments.hpp"
#include "smorder/tree.hpp"

namespace smorder {

enum class SOrdering { Before, Equal, After };

// Lexicographic comparison of moment sequences.  Both trees must have the
// same order; sequences of different lengths are incomparable and rejected.
SOrdering cmp_s(const MomentSequence& a, const MomentSequence& b);

// Index of the first entry where the sequences differ, or -1 when Equal.
int first_difference(const MomentSequence& a, const MomentSequence& b);

struct RankedEntry {
    Tree tree;
    CanonicalCode code;
    MomentSequence moments;
    int rank = 0;  // 1-based, ascending; equal moment sequences share a rank
};

struct RankedCatalog {
    std::vector<RankedEntry> entries;  // ascending; ties ordered by code

    std::size_t size() const { return entries.size(); }
    int max_rank() const { return entries.empty() ? 0 : entries.back().rank; }
};

// Sorts the trees ascending by moment sequence, assigning contiguous ranks
// from 1 with ties sharing a rank.  All trees must have the same order.
// max_power extends the moment sequences past the default length n (useful
// when n-1 powers cannot separate small trees).
RankedCatalog rank_catalog(const std::vector<Tree>& trees, int max_power = -1);

struct LastKResult {
    // The k maximal entries in ascending order (k-th last first).  When a
    // shared rank straddles the cut, every member of that rank is included,
    // so size() may exceed k.
    std::vector<RankedEntry> entries;
    bool boundary_tie = false;
};

// The k S-order-maximal entries.  Refuses k = 0 or k > catalog size.
LastKResult last_k(const RankedCatalog& catalog, std::size_t k);

struct EqualSClass {
    MomentSequence moments;
    std::vector<Tree> members;       // ordered by canonical code
    bool has_nonisomorphic = false;  // distinct trees sharing every moment
};

// Partition by exact moment-sequence equality, ascending.
std::vector<EqualSClass> equal_s_classes(const std::vector<Tree>& trees);

}  // namespace smorder
