#include "smorder/s_order.hpp"

#include <algorithm>
#include <stdexcept>

namespace smorder {

SOrdering cmp_s(const MomentSequence& a, const MomentSequence& b) {
    if (a.values.size() != b.values.size())
        throw std::invalid_argument("cmp_s: sequences of different lengths are incomparable");
    for (std::size_t i = 0; i < a.values.size(); ++i) {
        if (a.values[i] < b.values[i]) return SOrdering::Before;
        if (a.values[i] > b.values[i]) return SOrdering::After;
    }
    return SOrdering::Equal;
}

int first_difference(const MomentSequence& a, const MomentSequence& b) {
    if (a.values.size() != b.values.size())
        throw std::invalid_argument("first_difference: sequences of different lengths");
    for (std::size_t i = 0; i < a.values.size(); ++i)
        if (a.values[i] != b.values[i]) return static_cast<int>(i);
    return -1;
}

RankedCatalog rank_catalog(const std::vector<Tree>& trees, int max_power) {
    RankedCatalog catalog;
    catalog.entries.reserve(trees.size());
    for (const auto& t : trees) {
        if (t.n != trees.front().n)
            throw std::invalid_argument("rank_catalog: trees of mixed orders");
        catalog.entries.push_back({t, canonical_code(t), walk_moments(t, max_power), 0});
    }
    std::sort(catalog.entries.begin(), catalog.entries.end(),
              [](const RankedEntry& a, const RankedEntry& b) {
                  if (a.moments.values != b.moments.values)
                      return a.moments.values < b.moments.values;
                  return a.code < b.code;
              });
    int rank = 0;
    for (std::size_t i = 0; i < catalog.entries.size(); ++i) {
        if (i == 0 || catalog.entries[i].moments != catalog.entries[i - 1].moments) ++rank;
        catalog.entries[i].rank = rank;
    }
    return catalog;
}

LastKResult last_k(const RankedCatalog& catalog, std::size_t k) {
    if (k == 0) throw std::invalid_argument("last_k: k must be positive");
    if (k > catalog.size())
        throw std::invalid_argument("last_k: k exceeds catalog size");
    LastKResult result;
    std::size_t cut = catalog.size() - k;
    // Widen to the whole rank when the cut would split one.
    std::size_t start = cut;
    if (start > 0 && catalog.entries[start].rank == catalog.entries[start - 1].rank) {
        result.boundary_tie = true;
        while (start > 0 && catalog.entries[start].rank == catalog.entries[start - 1].rank)
            --start;
    }
    result.entries.assign(catalog.entries.begin() + start, catalog.entries.end());
    return result;
}

std::vector<EqualSClass> equal_s_classes(const std::vector<Tree>& trees) {
    auto catalog = rank_catalog(trees);
    std::vector<EqualSClass> classes;
    const CanonicalCode* prev_code = nullptr;
    for (auto& e : catalog.entries) {
        if (classes.empty() || !(classes.back().moments == e.moments)) {
            classes.push_back({e.moments, {}, false});
            prev_code = nullptr;
        }
        auto& cls = classes.back();
        // Members arrive sorted by code, so one adjacent comparison suffices
        // to notice two distinct isomorphism classes sharing the sequence.
        if (prev_code && !(*prev_code == e.code)) cls.has_nonisomorphic = true;
        cls.members.push_back(e.tree);
        prev_code = &e.code;
    }
    return classes;
}

}  // namespace smorder
