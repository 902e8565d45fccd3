#include "smorder/canonical.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace smorder {

std::string CanonicalCode::to_string() const {
    std::string out;
    out.reserve(2 * levels.size());
    int depth = -1;
    for (int l : levels) {
        for (; depth >= l; --depth) out.push_back(')');
        out.push_back('(');
        depth = l;
    }
    for (; depth >= 0; --depth) out.push_back(')');
    return out;
}

std::vector<int> rooted_code(const Tree& t, int v, int parent, int level) {
    std::vector<std::vector<int>> kids;
    kids.reserve(t.adj[v].size());
    for (int w : t.adj[v])
        if (w != parent) kids.push_back(rooted_code(t, w, v, level + 1));
    std::sort(kids.begin(), kids.end(), std::greater<>());
    std::vector<int> out{level};
    for (const auto& k : kids) out.insert(out.end(), k.begin(), k.end());
    return out;
}

CanonicalCode canonical_code(const Tree& t) {
    CanonicalCode best;
    for (int c : center(t)) {
        auto code = rooted_code(t, c, -1);
        if (best.levels.empty() || code < best.levels) best.levels = std::move(code);
    }
    return best;
}

Tree tree_from_level_sequence(const std::vector<int>& levels) {
    int n = static_cast<int>(levels.size());
    if (n == 0 || levels[0] != 0)
        throw std::invalid_argument("tree_from_level_sequence: sequence must start at level 0");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(n > 0 ? n - 1 : 0);
    for (int i = 1; i < n; ++i) {
        if (levels[i] < 1 || levels[i] > levels[i - 1] + 1)
            throw std::invalid_argument("tree_from_level_sequence: malformed level sequence");
        int j = i - 1;
        while (levels[j] != levels[i] - 1) --j;
        edges.emplace_back(j, i);
    }
    return tree_from_edges(n, edges);
}

bool isomorphic(const Tree& a, const Tree& b) {
    if (a.n != b.n) return false;
    return canonical_code(a) == canonical_code(b);
}

namespace {

// (canonical code, |Aut|) of the rooted subtree at v.
std::pair<std::vector<int>, std::uint64_t> rooted_aut(const Tree& t, int v, int parent,
                                                      int level) {
    std::vector<std::pair<std::vector<int>, std::uint64_t>> kids;
    for (int w : t.adj[v])
        if (w != parent) kids.push_back(rooted_aut(t, w, v, level + 1));
    std::sort(kids.begin(), kids.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });
    std::uint64_t aut = 1;
    std::uint64_t run = 1;
    std::vector<int> out{level};
    for (std::size_t i = 0; i < kids.size(); ++i) {
        aut *= kids[i].second;
        if (i > 0 && kids[i].first == kids[i - 1].first)
            aut *= ++run;
        else
            run = 1;
        out.insert(out.end(), kids[i].first.begin(), kids[i].first.end());
    }
    return {std::move(out), aut};
}

}  // namespace

std::uint64_t aut_size(const Tree& t) {
    auto c = center(t);
    if (c.size() == 1) return rooted_aut(t, c[0], -1, 0).second;
    auto [code0, aut0] = rooted_aut(t, c[0], c[1], 0);
    auto [code1, aut1] = rooted_aut(t, c[1], c[0], 0);
    std::uint64_t aut = aut0 * aut1;
    if (code0 == code1) aut *= 2;  // the halves can swap
    return aut;
}

}  // namespace smorder
