#pragma once

#include <string>
#include <vector>

#include "cubemorse/common.hpp"
#include "cubemorse/morse.hpp"

namespace cubemorse::cover {

// p-fold cover of the complete bipartite graph on F1 u F2 defined by a
// voltage assignment. Base vertices on each side are numbered 1..2n in the
// order x1..xn, y1..yn; the derived graph lives on (F1 u F2) x Z/p with
// (u, k) ~ (v, k + voltage(u, v)) for u in F1, v in F2.
struct VoltageCover {
    int n = 2;
    Int p;
    std::vector<std::vector<Int>> voltage;  // [F1 index 0..2n-1][F2 index 0..2n-1]

    int side_size() const { return 2 * n; }
    std::string base_label(int idx) const;  // "x1".."yn"

    // Theta edge class of a base vertex (shared by both sides).
    morse::EdgeClass base_class(int idx) const;

    // Derived-graph vertex id for (side, base index, fiber residue).
    long fiber_size() const;
    long derived_vertex(int side, int idx, long k) const;
    long num_derived_vertices() const;
    std::vector<long> derived_neighbors(long v) const;
    void derived_decode(long v, int& side, int& idx, long& k) const;
};

// Product voltage i*j mod p. Throws unless p is prime and p > 2n.
VoltageCover build_voltage_cover(int n, const Int& p);

struct CoverReport {
    CheckResult covering;       // local bijectivity onto the base star
    CheckResult connected;      // derived graph connectivity
    CheckResult four_cycle_lifts;  // every base 4-cycle lifts to one 4p-cycle
    Verdict overall() const;
    std::string first_witness() const;
};

CoverReport verify_cover_properties(const VoltageCover& cover);

// Connectivity of the preimage of the join of two nonempty base subsets
// (given as 0-based side indices).
bool preimage_join_connected(const VoltageCover& cover, const std::vector<int>& f1_subset,
                             const std::vector<int>& f2_subset);

// The Z/p fiber translation is an automorphism preserving the living
// subgraphs for every character (the latter checked for the given one).
CheckResult verify_deck_invariance(const VoltageCover& cover, const morse::Character& chi);

// Type-1 corner checks on the unramified join F1 * F2 * F3 (both engines).
morse::VerificationReport check_type1_hypotheses(int n, const morse::Character& chi);

// Type-2 checks on Gamma * F3 for all eight corner roles: the living
// subgraphs of the cover must be connected and the discrete factor's living
// sets nonempty, for the empty simplex, dead vertices, and dead edges.
morse::VerificationReport check_type2_hypotheses(const VoltageCover& cover,
                                                 const morse::Character& chi);

}  // namespace cubemorse::cover
