#include "smorder/graph6.hpp"

#include <stdexcept>
#include <vector>

namespace smorder {

namespace {

void append_n(std::string& out, int n) {
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else {
        // '~' then 18 bits, big-endian, 6 per character.
        out.push_back('~');
        out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
        out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
        out.push_back(static_cast<char>(63 + (n & 63)));
    }
}

}  // namespace

std::string to_graph6(const Tree& t) {
    if (t.n > 258047) throw std::invalid_argument("to_graph6: graph too large");
    std::string out;
    append_n(out, t.n);
    int bit = 0;
    int acc = 0;
    for (int v = 1; v < t.n; ++v)
        for (int u = 0; u < v; ++u) {
            acc = (acc << 1) | (t.has_edge(u, v) ? 1 : 0);
            if (++bit == 6) {
                out.push_back(static_cast<char>(63 + acc));
                bit = 0;
                acc = 0;
            }
        }
    if (bit > 0) out.push_back(static_cast<char>(63 + (acc << (6 - bit))));
    return out;
}

Tree tree_from_graph6(const std::string& s) {
    std::size_t pos = 0;
    auto need = [&](std::size_t k) {
        if (s.size() < pos + k) throw std::invalid_argument("tree_from_graph6: truncated input");
    };
    auto sixbits = [&]() {
        need(1);
        char c = s[pos++];
        if (c < 63 || c > 126) throw std::invalid_argument("tree_from_graph6: bad character");
        return c - 63;
    };
    need(1);
    long n;
    if (s[0] == '~') {
        ++pos;
        if (pos < s.size() && s[pos] == '~')
            throw std::invalid_argument("tree_from_graph6: graph too large");
        long a = sixbits(), b = sixbits(), c = sixbits();
        n = (a << 12) | (b << 6) | c;
    } else {
        n = sixbits();
    }
    if (n < 1) throw std::invalid_argument("tree_from_graph6: empty graph");
    long nbits = n * (n - 1) / 2;
    std::size_t nchars = static_cast<std::size_t>((nbits + 5) / 6);
    if (s.size() != pos + nchars) throw std::invalid_argument("tree_from_graph6: wrong length");

    std::vector<std::pair<int, int>> edges;
    int bit = 0;
    int acc = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) {
            if (bit == 0) {
                acc = sixbits();
                bit = 6;
            }
            --bit;
            if ((acc >> bit) & 1) edges.emplace_back(u, v);
        }
    if ((acc & ((1 << bit) - 1)) != 0)
        throw std::invalid_argument("tree_from_graph6: nonzero padding");
    if (static_cast<long>(edges.size()) != n - 1)
        throw std::invalid_argument("tree_from_graph6: not a tree (edge count)");
    return tree_from_edges(static_cast<int>(n), edges);  // rejects cycles via connectivity
}

}  // namespace smorder
