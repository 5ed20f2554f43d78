// Finite posets and bounded lattices: validation, lattice completion from a
// partial order, distributivity verdicts, join-irreducibles and the Birkhoff
// set representation that feeds the Boolean-algebra construction.
#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mvrep/common.hpp"

namespace mvrep {

struct Poset {
    int n = 0;
    std::vector<char> leq_;               // n*n, row-major
    std::vector<std::string> labels;      // optional, presentation only

    bool leq(Elem a, Elem b) const { return leq_[static_cast<size_t>(a) * n + b] != 0; }
    void set_leq(Elem a, Elem b, bool v = true) { leq_[static_cast<size_t>(a) * n + b] = v ? 1 : 0; }

    static Poset discrete(int n);
    // Closes the declared pairs reflexively and transitively.
    void close();
};

struct PosetViolation {
    std::string axiom;                    // "reflexivity" | "antisymmetry" | "transitivity"
    std::vector<Elem> witness;
};

struct PosetReport {
    std::vector<PosetViolation> violations;
    bool ok() const { return violations.empty(); }
};

// Checks reflexivity, antisymmetry and transitivity; every violated axiom is
// listed with its least witness tuple in element-index order.
PosetReport validate_poset(const Poset& p);

struct BoundedLattice {
    Poset poset;
    std::vector<Elem> join_, meet_;       // n*n tables
    Elem bottom = 0, top = 0;
    bool distributive = false;
    std::optional<std::array<Elem, 3>> distrib_witness;  // least (x,y,z) failing x^(yvz)=(x^y)v(x^z)

    int n() const { return poset.n; }
    Elem join(Elem a, Elem b) const { return join_[static_cast<size_t>(a) * n() + b]; }
    Elem meet(Elem a, Elem b) const { return meet_[static_cast<size_t>(a) * n() + b]; }
    bool leq(Elem a, Elem b) const { return poset.leq(a, b); }
};

struct LatticeBuildResult {
    std::optional<BoundedLattice> lattice;
    std::optional<std::pair<Elem, Elem>> witness;  // least pair with no join or no meet
    std::string detail;
};

// Builds join/meet tables by scanning minimal upper / maximal lower bounds.
// Requires a valid poset.  A pair without a least upper or greatest lower
// bound yields the NotALattice witness instead of a lattice.
LatticeBuildResult lattice_from_poset(const Poset& p);

struct JoinIrreducibleSet {
    std::vector<Elem> elements;           // ascending element indices
};

// Join-irreducibles by definition scan: j != bottom and j = a v b forces
// j in {a,b}.  Requires a distributive lattice; post-checks that every
// element is the join of the irreducibles below it.
JoinIrreducibleSet join_irreducibles(const BoundedLattice& l);

// Birkhoff set representation x |-> { j in J : j <= x } as a bitmask over
// the ascending join-irreducible list.
std::vector<Mask> birkhoff_embedding(const BoundedLattice& l, const JoinIrreducibleSet& jis);

// Longest-chain height of every element above the bottom; used for diagram
// ranking and isomorphism pruning.
std::vector<int> order_ranks(const Poset& p);

// Covering pairs (a,b): a < b with nothing strictly between.
std::vector<std::pair<Elem, Elem>> cover_pairs(const Poset& p);

} // namespace mvrep
