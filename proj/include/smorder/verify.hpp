#pragma once

#include <array>
#include <string>
#include <vector>

#include "smorder/enumerate.hpp"
#include "smorder/families.hpp"
#include "smorder/moments.hpp"
#include "smorder/tree.hpp"

namespace smorder {

// Which of the four published orderings applies to a (p,q) cell.  The split
// pivots on p against (q+4)/2; equal class sizes are their own case.
enum class CaseTag { EqualPQ, PGreater, PEqualBoundary, PLess };

std::string to_string(CaseTag tag);

enum class FamilyKind { B, D };

struct FamilyRef {
    FamilyKind family;
    FamilyParams params;

    Tree build() const;
    std::string name() const;  // e.g. "B(2,0)"; the (p,q) cell is implicit
};

struct TheoremCase {
    CaseTag tag;
    std::array<FamilyRef, 4> predicted;  // ascending: fourth-last first
};

// The published last-four list for the cell.  Requires 4 <= p <= q; smaller
// p is outside the stated hypotheses and rejected.
TheoremCase predicted_last_four(int p, int q);

struct VerificationReport {
    int p = 0, q = 0, n = 0;
    CaseTag tag = CaseTag::EqualPQ;
    std::size_t catalog_size = 0;
    std::array<std::string, 4> predicted_names;
    std::array<std::string, 4> predicted_codes;  // canonical, parenthesized
    std::vector<std::string> actual_codes;       // may exceed 4 on a boundary tie
    std::array<bool, 4> position_match{};
    // Moment index at which consecutive members of the actual top four
    // first differ (size 3; -1 means the pair is =_s).
    std::array<int, 3> separation_index{};
    bool strict_top = false;    // the four top sequences are pairwise distinct
    bool boundary_tie = false;  // a shared rank straddles the cut at four
    double elapsed_seconds = 0.0;
    bool pass = false;
};

VerificationReport verify_theorem(int p, int q,
                                  EnumBackend backend = EnumBackend::successor);

// One closed-form separation from the published proofs, re-derived from
// constructed trees.  `measured` is the exact difference computed from the
// moment machinery; `stated` is the closed form.
struct IdentityCheck {
    std::string name;
    bool applicable = false;  // some identities only apply on boundary cells
    long long measured = 0;
    long long stated = 0;
    bool pass = false;  // applicable implies measured == stated; vacuous otherwise
};

std::vector<IdentityCheck> verify_key_inequalities(int p, int q);

// Set-level structure of the one-step preimages used by the proofs.
struct ProofSetCheck {
    std::string name;
    std::vector<std::string> expected_codes;  // stated membership, canonical codes
    std::vector<std::string> actual_codes;    // inverse-construction result
    // Some stated sets are checked by size alone (>= 0 activates that mode;
    // expected_codes is then left empty).
    long long expected_count = -1;
    bool match = false;
};

struct ProofSetReport {
    int p = 0, q = 0;
    std::vector<ProofSetCheck> checks;
    bool pass = false;  // all checks match
};

ProofSetReport verify_proof_sets(int p, int q);

}  // namespace smorder
