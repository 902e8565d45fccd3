#include "smorder/moments.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

#include "smorder/canonical.hpp"

namespace smorder {

namespace {

// Trace accumulation over A^k computed column by column.  Returns false as
// soon as any addition overflows.
bool moments_int64(const Tree& t, int max_power, std::vector<BigInt>& out) {
    int n = t.n;
    out.assign(max_power + 1, 0);
    out[0] = n;
    // cur[v*n+u] = number of u->v walks of current length.
    std::vector<std::int64_t> cur(static_cast<std::size_t>(n) * n, 0), next(cur);
    for (int v = 0; v < n; ++v) cur[static_cast<std::size_t>(v) * n + v] = 1;
    for (int k = 1; k <= max_power; ++k) {
        std::int64_t trace = 0;
        for (int v = 0; v < n; ++v) {
            auto* row = &next[static_cast<std::size_t>(v) * n];
            std::fill(row, row + n, 0);
            for (int w : t.adj[v]) {
                const auto* src = &cur[static_cast<std::size_t>(w) * n];
                for (int u = 0; u < n; ++u)
                    if (__builtin_add_overflow(row[u], src[u], &row[u])) return false;
            }
            if (__builtin_add_overflow(trace, row[v], &trace)) return false;
        }
        out[k] = trace;
        std::swap(cur, next);
    }
    return true;
}

void moments_bigint(const Tree& t, int max_power, std::vector<BigInt>& out) {
    int n = t.n;
    out.assign(max_power + 1, 0);
    out[0] = n;
    std::vector<BigInt> cur(static_cast<std::size_t>(n) * n), next(cur);
    for (int v = 0; v < n; ++v) cur[static_cast<std::size_t>(v) * n + v] = 1;
    for (int k = 1; k <= max_power; ++k) {
        BigInt trace = 0;
        for (int v = 0; v < n; ++v) {
            auto* row = &next[static_cast<std::size_t>(v) * n];
            for (int u = 0; u < n; ++u) row[u] = 0;
            for (int w : t.adj[v]) {
                const auto* src = &cur[static_cast<std::size_t>(w) * n];
                for (int u = 0; u < n; ++u) row[u] += src[u];
            }
            trace += row[v];
        }
        out[k] = trace;
        std::swap(cur, next);
    }
}

long long choose2(long long d) { return d * (d - 1) / 2; }
long long choose3(long long d) { return d * (d - 1) * (d - 2) / 6; }

}  // namespace

MomentSequence walk_moments(const Tree& t, int max_power) {
    if (max_power < 0) max_power = t.n - 1;
    MomentSequence m;
    if (!moments_int64(t, max_power, m.values)) moments_bigint(t, max_power, m.values);
    return m;
}

long long count_p2(const Tree& t) { return t.n - 1; }

long long count_p3(const Tree& t) {
    long long total = 0;
    for (int v = 0; v < t.n; ++v) total += choose2(t.degree(v));
    return total;
}

long long count_p4(const Tree& t) {
    // Exact on triangle-free graphs; trees qualify by construction.
    long long total = 0;
    for (auto [u, v] : t.edges())
        total += static_cast<long long>(t.degree(u) - 1) * (t.degree(v) - 1);
    return total;
}

long long count_k13(const Tree& t) {
    long long total = 0;
    for (int v = 0; v < t.n; ++v) total += choose3(t.degree(v));
    return total;
}

SubgraphCounts subgraph_counts(const Tree& t) {
    return {count_p2(t), count_p3(t), count_p4(t), count_k13(t)};
}

long long s4_formula(const Tree& t) { return 2 * count_p2(t) + 4 * count_p3(t); }

long long s5_formula(const Tree&) { return 0; }

long long s6_formula(const Tree& t) {
    return 2 * count_p2(t) + 12 * count_p3(t) + 6 * count_p4(t) + 12 * count_k13(t);
}

long long count_subgraph_bruteforce(const Tree& t, const Tree& pattern) {
    int k = pattern.n;
    if (k > 6) throw std::invalid_argument("count_subgraph_bruteforce: pattern order above 6");
    if (k > t.n) return 0;
    auto pattern_code = canonical_code(pattern);

    // A k-subset of vertices spans a subgraph copy iff the induced edges
    // contain a spanning tree isomorphic to the pattern; on a host tree the
    // induced edge set is itself acyclic, so the copy exists iff the induced
    // subgraph is connected and isomorphic to the pattern.
    long long total = 0;
    std::vector<int> pick(k);
    std::vector<int> index_of(t.n, -1);
    auto scan = [&](auto&& self, int depth, int first) -> void {
        if (depth == k) {
            for (int i = 0; i < k; ++i) index_of[pick[i]] = i;
            std::vector<std::pair<int, int>> edges;
            for (int i = 0; i < k; ++i)
                for (int w : t.adj[pick[i]])
                    if (index_of[w] > i) edges.emplace_back(i, index_of[w]);
            if (static_cast<int>(edges.size()) == k - 1) {
                try {
                    Tree sub = tree_from_edges(k, edges);
                    if (canonical_code(sub) == pattern_code) ++total;
                } catch (const std::invalid_argument&) {
                    // disconnected subset
                }
            }
            for (int i = 0; i < k; ++i) index_of[pick[i]] = -1;
            return;
        }
        for (int v = first; v < t.n; ++v) {
            pick[depth] = v;
            self(self, depth + 1, v + 1);
        }
    };
    scan(scan, 0, 0);
    return total;
}

}  // namespace smorder
