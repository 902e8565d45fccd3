#pragma once

#include <compare>
#include <stdexcept>
#include <vector>

#include "smorder/tree.hpp"

namespace smorder {

// Parameters of the two extremal families.  Both families live in the set of
// trees with bipartition (p,q): two adjacent centers, one of which carries a
// branch vertex with k leaves (when k >= 1), l pendant paths of length two,
// and plain leaves, while the other center carries the remaining leaves.
//
// Family B puts the decorations on the center of degree q; family D puts
// them on the center of degree p.  Constraints: family B needs k+l <= p-1
// and l <= q-2; family D needs k+l <= q-1 and l <= p-2.
struct FamilyParams {
    int p = 0;
    int q = 0;
    int k = 0;
    int l = 0;

    bool operator==(const FamilyParams&) const = default;
};

// The tree with two adjacent centers of degrees q and p, every other vertex
// a leaf (the k = l = 0 member of both families).  Requires 1 <= p <= q; the
// p = 1 instance degenerates to the star, reported through *degenerate when
// the caller passes a flag.
Tree double_star(int p, int q, bool* degenerate = nullptr);

// Vertex labels in constructed family members (documented so tests can
// address the named vertices):
//   0: u, the decorated center;  1: v, the other center;
//   2: x, the branch vertex (only when k >= 1), followed by its k leaves;
//   then l path vertices, then their l tips, then u's plain leaves,
//   then v's leaves.
Tree family_b(const FamilyParams& params);
Tree family_d(const FamilyParams& params);

// An application site for either rewiring operation; the roles of u, v, w
// are as documented at apply_op1/apply_op2.
struct OpSite {
    int u = -1;
    int v = -1;
    int w = -1;

    auto operator<=>(const OpSite&) const = default;
};

// Moves the leaf u from v to w.  Requires: uv an edge with u a leaf,
// dist(v,w) = 2, and d(w) >= d(v).  The bipartition is unchanged and the
// moment sequence strictly increases (S_4 grows by 4(d(w)-d(v)+1)).
// Violated preconditions raise std::invalid_argument naming the clause.
Tree apply_op1(const Tree& t, const OpSite& site);

// Moves every leaf of v except its link to u over to w.  Requires: v
// adjacent to u with all of v's other neighbors leaves, at least two of
// them, and w another neighbor of u with d(w) >= 2.  The bipartition is
// unchanged and S_4 grows by 4k(d(w)-1) where k is the number of moved
// leaves.
Tree apply_op2(const Tree& t, const OpSite& site);

// Every site where the respective operation applies, sorted by (u,v,w).
std::vector<OpSite> op1_sites(const Tree& t);
std::vector<OpSite> op2_sites(const Tree& t);

// Raised when a maximal chain stalls on a tree that is not the double star;
// such a tree would contradict the reduction the extremal results rest on.
struct AscentFailure : std::runtime_error {
    explicit AscentFailure(const std::string& what) : std::runtime_error(what) {}
};

// Repeatedly applies the first applicable site (operation II preferred over
// I, then lowest (u,v,w)) until no site remains, recording every tree along
// the way.  The final tree is checked against the double star of the same
// bipartition; a mismatch raises AscentFailure.  The chain has length 1
// exactly when the input already is the double star (or a star / tiny tree).
std::vector<Tree> ascend_chain(const Tree& t);

// All trees, up to isomorphism, that the respective operation maps onto a
// tree isomorphic to target (single application).  Built by inverting the
// operation at every plausible site; results are canonical forms in
// ascending code order.
std::vector<Tree> preimages_op1(const Tree& target);
std::vector<Tree> preimages_op2(const Tree& target);

}  // namespace smorder
