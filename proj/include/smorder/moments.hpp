#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "smorder/tree.hpp"

namespace smorder {

using BigInt = boost::multiprecision::cpp_int;

// S_k for k = 0..len-1, where S_k is the number of closed k-walks, equal to
// the k-th power sum of the adjacency eigenvalues.  Always exact: S_0 = n,
// S_1 = 0, S_2 = 2(n-1), odd entries zero on trees.
struct MomentSequence {
    std::vector<BigInt> values;

    bool operator==(const MomentSequence&) const = default;
};

// Traces of adjacency-matrix powers 0..max_power (default n-1).  Computed in
// 64-bit arithmetic with overflow detection; any overflow restarts the whole
// computation in arbitrary precision, so results are never wrapped.
MomentSequence walk_moments(const Tree& t, int max_power = -1);

// Counts of the acyclic 4-vertex-or-smaller patterns that determine S_4..S_6
// on trees.  Patterns containing a cycle have count zero on every tree and
// are not stored.
struct SubgraphCounts {
    long long p2 = 0;   // edges
    long long p3 = 0;   // paths on 3 vertices
    long long p4 = 0;   // paths on 4 vertices
    long long k13 = 0;  // stars with 3 rays

    bool operator==(const SubgraphCounts&) const = default;
};

SubgraphCounts subgraph_counts(const Tree& t);

long long count_p2(const Tree& t);   // n-1
long long count_p3(const Tree& t);   // sum of C(d(v),2)
long long count_p4(const Tree& t);   // sum over edges of (d(u)-1)(d(v)-1)
long long count_k13(const Tree& t);  // sum of C(d(v),3)

// Number of subgraphs of t isomorphic to pattern (subgraphs, not induced),
// by exhaustive search over vertex subsets.  Oracle for the closed forms.
// pattern order is capped at 6.
long long count_subgraph_bruteforce(const Tree& t, const Tree& pattern);

// Closed forms for the low moments of a tree.
long long s4_formula(const Tree& t);  // 2 p2 + 4 p3
long long s5_formula(const Tree& t);  // 0
long long s6_formula(const Tree& t);  // 2 p2 + 12 p3 + 6 p4 + 12 k13

}  // namespace smorder
