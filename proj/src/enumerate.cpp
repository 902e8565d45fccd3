#include "smorder/enumerate.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <stdexcept>
#include <string>

namespace smorder {

namespace {

int& cap_storage() {
    static int cap = [] {
        if (const char* env = std::getenv("SMORDER_CAP")) {
            int v = std::atoi(env);
            if (v >= 1) return v;
        }
        return 18;
    }();
    return cap;
}

}  // namespace

int enumeration_cap() { return cap_storage(); }

void set_enumeration_cap(int n) {
    if (n < 1) throw std::invalid_argument("enumeration cap must be positive");
    cap_storage() = n;
}

namespace {

void check_n(int n) {
    if (n < 1) throw std::invalid_argument("tree enumeration: n must be positive");
    if (n > enumeration_cap())
        throw std::invalid_argument("tree enumeration: n = " + std::to_string(n) +
                                    " exceeds cap " + std::to_string(enumeration_cap()) +
                                    " (set SMORDER_CAP to raise)");
}

// Walks every canonical rooted level sequence on n vertices in descending
// lexicographic order, from the path [0,1,...,n-1] down to the star
// [0,1,1,...,1], and keeps exactly the rootings whose sequence is the
// canonical code of the underlying free tree: the root must be a center,
// and for a bicentral tree this rooting must not exceed the other one
// (the smaller rooting is the canonical one).  Accepted codes come out in
// descending order.
std::vector<std::vector<int>> free_codes_descending(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> L(n);
    for (int i = 0; i < n; ++i) L[i] = i;

    // Buffers reused across candidates; edges live in a CSR layout.
    std::vector<int> parent(n), deg(n), d(n), last_at_level(n), strip(n);
    std::vector<int> head(n + 1), slot(n), nbr(n > 1 ? 2 * (n - 1) : 0);
    for (;;) {
        parent[0] = -1;
        last_at_level[0] = 0;
        std::fill(deg.begin(), deg.end(), 0);
        for (int i = 1; i < n; ++i) {
            parent[i] = last_at_level[L[i] - 1];
            last_at_level[L[i]] = i;
            ++deg[i];
            ++deg[parent[i]];
        }
        head[0] = 0;
        for (int v = 0; v < n; ++v) {
            head[v + 1] = head[v] + deg[v];
            slot[v] = head[v];
        }
        for (int i = 1; i < n; ++i) {
            nbr[slot[parent[i]]++] = i;
            nbr[slot[i]++] = parent[i];
        }

        // Centers by leaf stripping.
        int c1, c2;
        if (n == 1) {
            c1 = 0;
            c2 = -1;
        } else {
            d = deg;
            int lo = 0, hi = 0;
            for (int v = 0; v < n; ++v)
                if (d[v] == 1) strip[hi++] = v;
            int remaining = n;
            while (remaining > 2) {
                int layer_end = hi;
                remaining -= layer_end - lo;
                while (lo < layer_end) {
                    int v = strip[lo++];
                    for (int j = head[v]; j < head[v + 1]; ++j)
                        if (--d[nbr[j]] == 1) strip[hi++] = nbr[j];
                }
            }
            c1 = strip[lo];
            c2 = (remaining == 2) ? strip[lo + 1] : -1;
        }

        bool accept = (c1 == 0 || c2 == 0);
        if (accept && c2 >= 0) {
            int other = (c1 == 0) ? c2 : c1;
            std::vector<std::pair<int, int>> edges;
            edges.reserve(n - 1);
            for (int i = 1; i < n; ++i) edges.emplace_back(parent[i], i);
            Tree t = tree_from_edges(n, edges);
            accept = !(rooted_code(t, other, -1) < L);
        }
        if (accept) out.push_back(L);

        // Successor: shrink at the last entry >= 2.
        int p = n - 1;
        while (p > 0 && L[p] < 2) --p;
        if (p == 0) break;
        int q = p - 1;
        while (L[q] != L[p] - 1) --q;
        for (int i = p; i < n; ++i) L[i] = L[i - (p - q)];
    }
    return out;
}

std::vector<std::vector<int>> free_codes_exhaustive(int n) {
    std::set<std::vector<int>> seen;
    if (n == 1) {
        seen.insert({0});
    } else if (n == 2) {
        seen.insert({0, 1});
    } else {
        // Every labeled tree arises from exactly one Prufer sequence.
        std::vector<int> code(n - 2, 0);
        std::vector<int> deg(n);
        for (;;) {
            std::fill(deg.begin(), deg.end(), 1);
            for (int v : code) ++deg[v];
            std::vector<std::pair<int, int>> edges;
            edges.reserve(n - 1);
            // Smallest-leaf elimination, linear scan (n is tiny here).
            auto d = deg;
            std::vector<char> used(n, 0);
            for (int v : code) {
                int leaf = 0;
                while (used[leaf] || d[leaf] != 1) ++leaf;
                edges.emplace_back(leaf, v);
                used[leaf] = 1;
                --d[v];
            }
            int a = -1, b = -1;
            for (int v = 0; v < n; ++v)
                if (!used[v] && d[v] == 1) (a < 0 ? a : b) = v;
            edges.emplace_back(a, b);
            seen.insert(canonical_code(tree_from_edges(n, edges)).levels);

            int i = n - 3;
            while (i >= 0 && code[i] == n - 1) code[i--] = 0;
            if (i < 0) break;
            ++code[i];
        }
    }
    return {seen.begin(), seen.end()};
}

}  // namespace

void for_each_free_tree(int n, const std::function<void(const std::vector<int>&)>& fn,
                        EnumBackend backend) {
    check_n(n);
    if (backend == EnumBackend::successor) {
        auto codes = free_codes_descending(n);
        for (auto it = codes.rbegin(); it != codes.rend(); ++it) fn(*it);
    } else {
        for (const auto& code : free_codes_exhaustive(n)) fn(code);
    }
}

std::vector<Tree> free_trees(int n, EnumBackend backend) {
    std::vector<Tree> out;
    for_each_free_tree(
        n, [&](const std::vector<int>& code) { out.push_back(tree_from_level_sequence(code)); },
        backend);
    return out;
}

std::vector<Tree> trees_with_bipartition(int p, int q, EnumBackend backend) {
    if (p < 1 || p > q) throw std::invalid_argument("trees_with_bipartition: need 1 <= p <= q");
    std::vector<Tree> out;
    for_each_free_tree(
        p + q,
        [&](const std::vector<int>& code) {
            Tree t = tree_from_level_sequence(code);
            auto b = bipartition(t);
            if (b.p == p && b.q == q) out.push_back(std::move(t));
        },
        backend);
    return out;
}

}  // namespace smorder
