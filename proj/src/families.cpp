#include "smorder/families.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <string>

#include "smorder/canonical.hpp"
#include "smorder/moments.hpp"

namespace smorder {

namespace {

// Common builder: center u of degree top plus decorations, center v carrying
// the rest.  `other` is the size of u's side of the bipartition.
Tree build_family(int other, int top, int k, int l) {
    if (other < 1 || top < 1) throw std::invalid_argument("family: class sizes must be positive");
    if (k < 0 || l < 0) throw std::invalid_argument("family: k and l must be nonnegative");
    if (k + l > other - 1)
        throw std::invalid_argument("family: k + l exceeds the leaf budget of the far center");
    if (l > 0 && l > top - 2)
        throw std::invalid_argument("family: l exceeds the extendable leaves of the near center");
    int u_plain = top - 1 - (k >= 1 ? 1 : 0) - l;
    if (u_plain < 0) throw std::invalid_argument("family: near center degree too small for k");

    int n = other + top;
    std::vector<std::pair<int, int>> edges;
    edges.reserve(n - 1);
    int next = 2;
    edges.emplace_back(0, 1);
    if (k >= 1) {
        int x = next++;
        edges.emplace_back(0, x);
        for (int i = 0; i < k; ++i) edges.emplace_back(x, next++);
    }
    for (int i = 0; i < l; ++i) {
        int stem = next++;
        edges.emplace_back(0, stem);
        edges.emplace_back(stem, next++);
    }
    for (int i = 0; i < u_plain; ++i) edges.emplace_back(0, next++);
    for (int i = 0; i < other - 1 - k - l; ++i) edges.emplace_back(1, next++);

    Tree t = tree_from_edges(n, edges);
    auto b = bipartition(t);
    assert(b.p == std::min(other, top) && b.q == std::max(other, top));
    (void)b;
    return t;
}

}  // namespace

Tree double_star(int p, int q, bool* degenerate) {
    if (p < 1 || p > q) throw std::invalid_argument("double_star: need 1 <= p <= q");
    if (degenerate) *degenerate = (p == 1);
    return build_family(p, q, 0, 0);
}

Tree family_b(const FamilyParams& params) {
    if (params.p > params.q) throw std::invalid_argument("family_b: need p <= q");
    return build_family(params.p, params.q, params.k, params.l);
}

Tree family_d(const FamilyParams& params) {
    if (params.p > params.q) throw std::invalid_argument("family_d: need p <= q");
    return build_family(params.q, params.p, params.k, params.l);
}

namespace {

void check_op1(const Tree& t, const OpSite& site) {
    auto bad = [](const std::string& clause) {
        throw std::invalid_argument("apply_op1: " + clause);
    };
    if (site.u < 0 || site.u >= t.n || site.v < 0 || site.v >= t.n || site.w < 0 ||
        site.w >= t.n)
        bad("site vertex out of range");
    if (!t.has_edge(site.u, site.v)) bad("u must be adjacent to v");
    if (!t.is_leaf(site.u)) bad("u must be a leaf");
    if (site.w == site.u || site.w == site.v) bad("w must be distinct from u and v");
    if (distance(t, site.v, site.w) != 2) bad("w must be at distance 2 from v");
    if (t.degree(site.w) < t.degree(site.v)) bad("w may not have smaller degree than v");
}

// k = number of leaves that operation II moves from v, or -1 with the failed
// clause thrown.
int check_op2(const Tree& t, const OpSite& site) {
    auto bad = [](const std::string& clause) {
        throw std::invalid_argument("apply_op2: " + clause);
    };
    if (site.u < 0 || site.u >= t.n || site.v < 0 || site.v >= t.n || site.w < 0 ||
        site.w >= t.n)
        bad("site vertex out of range");
    if (!t.has_edge(site.u, site.v)) bad("v must be adjacent to u");
    if (site.w == site.v || site.w == site.u) bad("w must be distinct from u and v");
    if (!t.has_edge(site.u, site.w)) bad("w must be adjacent to u");
    if (t.degree(site.w) < 2) bad("w must have degree at least 2");
    int k = 0;
    for (int z : t.adj[site.v])
        if (z != site.u) {
            if (!t.is_leaf(z)) bad("every neighbor of v besides u must be a leaf");
            ++k;
        }
    if (k < 2) bad("v must carry at least two leaves");
    return k;
}

Tree rewire(const Tree& t, const std::vector<std::pair<int, int>>& remove,
            const std::vector<std::pair<int, int>>& add) {
    auto edges = t.edges();
    for (auto [a, b] : remove) {
        auto key = std::minmax(a, b);
        std::erase(edges, std::pair<int, int>(key.first, key.second));
    }
    for (auto [a, b] : add) edges.emplace_back(std::min(a, b), std::max(a, b));
    return tree_from_edges(t.n, edges);
}

}  // namespace

Tree apply_op1(const Tree& t, const OpSite& site) {
    check_op1(t, site);
    Tree result = rewire(t, {{site.u, site.v}}, {{site.u, site.w}});
    assert(s4_formula(result) - s4_formula(t) ==
           4 * (t.degree(site.w) - t.degree(site.v) + 1));
    return result;
}

Tree apply_op2(const Tree& t, const OpSite& site) {
    int k = check_op2(t, site);
    std::vector<std::pair<int, int>> remove, add;
    for (int z : t.adj[site.v])
        if (z != site.u) {
            remove.push_back({site.v, z});
            add.push_back({site.w, z});
        }
    Tree result = rewire(t, remove, add);
    assert(s4_formula(result) - s4_formula(t) == 4 * k * (t.degree(site.w) - 1));
    (void)k;
    return result;
}

std::vector<OpSite> op1_sites(const Tree& t) {
    std::vector<OpSite> sites;
    for (int u = 0; u < t.n; ++u) {
        if (!t.is_leaf(u)) continue;
        int v = t.adj[u][0];
        auto dist = distances_from(t, v);
        for (int w = 0; w < t.n; ++w)
            if (dist[w] == 2 && t.degree(w) >= t.degree(v)) sites.push_back({u, v, w});
    }
    std::sort(sites.begin(), sites.end());
    return sites;
}

std::vector<OpSite> op2_sites(const Tree& t) {
    std::vector<OpSite> sites;
    for (int v = 0; v < t.n; ++v) {
        if (t.degree(v) < 3) continue;  // u plus at least two leaves
        for (int u : t.adj[v]) {
            bool pendant_star = true;
            for (int z : t.adj[v])
                if (z != u && !t.is_leaf(z)) {
                    pendant_star = false;
                    break;
                }
            if (!pendant_star) continue;
            for (int w : t.adj[u])
                if (w != v && t.degree(w) >= 2) sites.push_back({u, v, w});
        }
    }
    std::sort(sites.begin(), sites.end());
    return sites;
}

std::vector<Tree> ascend_chain(const Tree& t) {
    std::vector<Tree> chain{t};
    // S_4 strictly increases each step and is bounded on n vertices, so this
    // guard is never the terminator on a correct run.
    int guard = 8 * t.n * t.n * t.n + 64;
    for (;;) {
        const Tree& cur = chain.back();
        auto sites2 = op2_sites(cur);
        if (!sites2.empty()) {
            chain.push_back(apply_op2(cur, sites2.front()));
        } else {
            auto sites1 = op1_sites(cur);
            if (sites1.empty()) break;
            chain.push_back(apply_op1(cur, sites1.front()));
        }
        if (--guard < 0) throw AscentFailure("ascend_chain: step guard exhausted");
    }
    if (t.n >= 2) {
        auto b = bipartition(chain.back());
        if (!isomorphic(chain.back(), double_star(std::max(b.p, 1), b.q)))
            throw AscentFailure(
                "ascend_chain: chain stalled on a tree that is not the double star");
    }
    return chain;
}

namespace {

std::vector<Tree> dedup_sorted(std::vector<std::vector<int>>&& codes) {
    std::sort(codes.begin(), codes.end());
    codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
    std::vector<Tree> out;
    out.reserve(codes.size());
    for (const auto& c : codes) out.push_back(tree_from_level_sequence(c));
    return out;
}

}  // namespace

std::vector<Tree> preimages_op1(const Tree& target) {
    std::vector<std::vector<int>> codes;
    for (int u = 0; u < target.n; ++u) {
        if (!target.is_leaf(u)) continue;
        int w = target.adj[u][0];
        auto dist = distances_from(target, w);
        for (int v = 0; v < target.n; ++v) {
            // Undoing the move must leave a legal site: in the preimage u
            // hangs on v, w has one neighbor fewer, and d(w) >= d(v) there.
            if (v == u || dist[v] != 2) continue;
            if (target.degree(w) - 1 < target.degree(v) + 1) continue;
            Tree pre = rewire(target, {{u, w}}, {{u, v}});
            assert(isomorphic(apply_op1(pre, {u, v, w}), target));
            codes.push_back(canonical_code(pre).levels);
        }
    }
    return dedup_sorted(std::move(codes));
}

std::vector<Tree> preimages_op2(const Tree& target) {
    std::vector<std::vector<int>> codes;
    for (int v = 0; v < target.n; ++v) {
        if (!target.is_leaf(v)) continue;
        int u = target.adj[v][0];
        for (int w : target.adj[u]) {
            if (w == v) continue;
            std::vector<int> leaves;
            for (int z : target.adj[w])
                if (target.is_leaf(z)) leaves.push_back(z);
            // Moving k of w's leaves back onto v: any k-subset gives the
            // same tree up to isomorphism, so a prefix suffices.
            int k_max = std::min<int>(static_cast<int>(leaves.size()), target.degree(w) - 2);
            for (int k = 2; k <= k_max; ++k) {
                std::vector<std::pair<int, int>> remove, add;
                for (int i = 0; i < k; ++i) {
                    remove.push_back({w, leaves[i]});
                    add.push_back({v, leaves[i]});
                }
                Tree pre = rewire(target, remove, add);
                assert(isomorphic(apply_op2(pre, {u, v, w}), target));
                codes.push_back(canonical_code(pre).levels);
            }
        }
    }
    return dedup_sorted(std::move(codes));
}

}  // namespace smorder
