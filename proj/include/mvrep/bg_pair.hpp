// Pairs (B, G): a finite Boolean algebra with a group of automorphisms,
// realised as atom permutations.  Orbit congruences, the lower sets L and
// L+, the two MV-pair conditions, quotients, the phi-preserving group of a
// generated Boolean algebra, and both directions of the representation
// theorem.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mvrep/rgen.hpp"

namespace mvrep {

struct Perm {
    std::vector<int> img;                 // atom i -> img[i]

    int degree() const { return static_cast<int>(img.size()); }
    bool operator==(const Perm& o) const { return img == o.img; }
    bool operator<(const Perm& o) const { return img < o.img; }

    static Perm id(int n);
    Perm compose(const Perm& then) const; // apply *this first, `then` second
    Perm inverse() const;
    Mask apply(Mask x) const;
};

struct Group {
    int atoms = 0;
    std::vector<Perm> perms;              // sorted ascending; perms[0] is the identity

    size_t order() const { return perms.size(); }
    bool contains(const Perm& p) const;
    int index_of(const Perm& p) const;    // -1 when absent
};

// All atom permutations; CapExceeded when atoms > cap.
Group full_aut(int atoms, int cap = 8);

// Closure of the generators under composition and inverse; verified a group.
Group subgroup_closure(int atoms, const std::vector<Perm>& generators);

// Every subgroup of the full symmetric group on `atoms` letters.
std::vector<Group> all_subgroups(int atoms);

struct BGPair {
    BooleanAlg alg;
    Group group;
    std::string name;

    // Image tables perm-index x mask, built once per pair.
    std::vector<std::vector<Mask>> image_tables() const;
};

// Orbit equivalence of the group action on all of B.
Partition orbit_partition(const BGPair& p);

struct LowerSets {
    std::vector<Mask> L, Lplus;           // ascending, deduped
    std::vector<Mask> maxL, maxLplus;     // maximal elements under inclusion
};

// L(a,b) = { a ^ f(b) }, L+(a,b) = { g(a) ^ f(b) }.
LowerSets lower_sets(const BGPair& p, Mask a, Mask b);

struct Mvp1Result {
    bool holds = false;
    // Least failing (a, b, f): no h in G has h(a) = f(a) and h(b) = b.
    std::optional<Mask> witness_a, witness_b;
    std::optional<Perm> witness_f;
    bool form_b = false, form_c = false;  // the two equivalent reformulations
};

// The first MV-pair condition, plus its two equivalent forms (quantifying
// over a <= b resp. a ^ b = 0); three-way agreement is asserted.
Mvp1Result check_mvp1(const BGPair& p);

struct Mvp2Result {
    bool holds = false;
    std::optional<std::array<Mask, 3>> witness;  // (a, b, x) with no maximal element of L(a,b) above x
};

Mvp2Result check_mvp2(const BGPair& p);

struct MvPairVerdict {
    Mvp1Result mvp1;
    Mvp2Result mvp2;
    bool is_mv_pair() const { return mvp1.holds && mvp2.holds; }
};

MvPairVerdict mv_pair_verdict(const BGPair& p);

// For MV-pairs: every f in G maps each maximal element of L(a,b) to a
// maximal element of L+(a,b), and max L(a,b) is contained in max L+(a,b).
bool max_transport_check(const BGPair& p);

struct QuotientMvResult {
    Partition orbits;
    QuotientResult quotient;
    BoundedLattice lattice;               // lattice reduct of the quotient
};

// Quotient of an MV-pair by its orbit congruence.  Verifies: the orbit
// partition satisfies (C1),(C2),(C5),(C6); the quotient is lattice-ordered
// with the Riesz decomposition property and all four MV conditions; and the
// meet identity holds: the meet class [a] ^ [b], as an element set, equals
// the maximal elements of L+(a,b), with every element of L+(a,b) below it.
QuotientMvResult build_quotient_mv(const BGPair& p);

// G(M): the automorphisms of the generated Boolean algebra commuting with
// phi.  Verified to be a subgroup.  CapExceeded above `cap` atoms.
Group phi_preserving_group(const RGen& r, int cap = 8);

// For phi(u) = phi(v): the involutive automorphism swapping u and v and
// fixing everything below the complement of u v v, assembled from the
// interval isomorphisms.  Error PhiMismatch when phi(u) != phi(v).
Perm phi_swap(const RGen& r, Mask u, Mask v);

// Orbit equivalence of (B(M), G(M)) coincides with the phi fibres, and every
// u is equivalent to the embedded phi(u).
bool kernel_equality_check(const RGen& r, int cap = 8);

struct RepresentationResult {
    RGen rgen;
    Group group;                          // G(M)
    MvPairVerdict pair_verdict;
    QuotientMvResult quotient;
    std::vector<Elem> iso_map;            // quotient block -> element of m
    MorphismFlags iso_flags;
    bool ok = false;
};

// The full round trip: (B(M), G(M)) is an MV-pair and its quotient is
// isomorphic to m via [a] |-> phi(a).  Errors: NotMvEffect, CapExceeded.
RepresentationResult verify_representation(const EffectAlgebra& m, int max_atoms = 8);

} // namespace mvrep
