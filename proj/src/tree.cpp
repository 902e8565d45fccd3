#include "smorder/tree.hpp"

#include <algorithm>
#include <queue>

namespace smorder {

bool Tree::has_edge(int u, int v) const {
    const auto& a = adj[u];
    return std::binary_search(a.begin(), a.end(), v);
}

std::vector<std::pair<int, int>> Tree::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(n > 0 ? n - 1 : 0);
    for (int u = 0; u < n; ++u)
        for (int v : adj[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

Tree tree_from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n <= 0) throw std::invalid_argument("tree_from_edges: n must be positive");
    if (static_cast<int>(edges.size()) != n - 1)
        throw std::invalid_argument("tree_from_edges: a tree on " + std::to_string(n) +
                                    " vertices needs " + std::to_string(n - 1) + " edges, got " +
                                    std::to_string(edges.size()));
    Tree t;
    t.n = n;
    t.adj.assign(n, {});
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("tree_from_edges: vertex label out of range");
        if (u == v) throw std::invalid_argument("tree_from_edges: self-loop");
        t.adj[u].push_back(v);
        t.adj[v].push_back(u);
    }
    for (int v = 0; v < n; ++v) {
        auto& a = t.adj[v];
        std::sort(a.begin(), a.end());
        if (std::adjacent_find(a.begin(), a.end()) != a.end())
            throw std::invalid_argument("tree_from_edges: duplicate edge");
    }
    // n-1 edges and no multi-edges: connectivity is the remaining tree test.
    std::vector<char> seen(n, 0);
    std::queue<int> bfs;
    bfs.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!bfs.empty()) {
        int u = bfs.front();
        bfs.pop();
        for (int w : t.adj[u])
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                bfs.push(w);
            }
    }
    if (reached != n) throw std::invalid_argument("tree_from_edges: graph is disconnected");
    return t;
}

Bipartition bipartition(const Tree& t) {
    Bipartition b;
    b.side.assign(t.n, 0);
    std::queue<int> bfs;
    bfs.push(0);
    std::vector<char> seen(t.n, 0);
    seen[0] = 1;
    while (!bfs.empty()) {
        int u = bfs.front();
        bfs.pop();
        for (int w : t.adj[u])
            if (!seen[w]) {
                seen[w] = 1;
                b.side[w] = static_cast<std::uint8_t>(1 - b.side[u]);
                bfs.push(w);
            }
    }
    int n0 = static_cast<int>(std::count(b.side.begin(), b.side.end(), 0));
    int n1 = t.n - n0;
    if (n1 < n0) {
        // Swap so that side 0 is the smaller class.  On a tie vertex 0 keeps
        // side 0, which this branch never disturbs.
        for (auto& s : b.side) s = static_cast<std::uint8_t>(1 - s);
        std::swap(n0, n1);
    }
    b.p = n0;
    b.q = n1;
    return b;
}

std::vector<int> distances_from(const Tree& t, int u) {
    std::vector<int> dist(t.n, -1);
    dist[u] = 0;
    std::queue<int> bfs;
    bfs.push(u);
    while (!bfs.empty()) {
        int x = bfs.front();
        bfs.pop();
        for (int w : t.adj[x])
            if (dist[w] < 0) {
                dist[w] = dist[x] + 1;
                bfs.push(w);
            }
    }
    return dist;
}

int distance(const Tree& t, int u, int v) { return distances_from(t, u)[v]; }

std::vector<int> center(const Tree& t) {
    if (t.n == 1) return {0};
    if (t.n == 2) return {0, 1};
    std::vector<int> deg(t.n);
    std::vector<int> layer;
    for (int v = 0; v < t.n; ++v) {
        deg[v] = t.degree(v);
        if (deg[v] == 1) layer.push_back(v);
    }
    int remaining = t.n;
    while (remaining > 2) {
        std::vector<int> next;
        remaining -= static_cast<int>(layer.size());
        for (int v : layer)
            for (int w : t.adj[v])
                if (--deg[w] == 1) next.push_back(w);
        layer = std::move(next);
    }
    std::sort(layer.begin(), layer.end());
    return layer;
}

}  // namespace smorder
