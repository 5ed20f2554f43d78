// Partitions of effect algebras, the congruence conditions (C1), (C2), (C5),
// (C6), quotient construction with well-definedness verification, and the
// order characterisation of quotient classes.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mvrep/effect.hpp"

namespace mvrep {

struct Partition {
    std::vector<int> block_of;            // element -> block id
    std::vector<std::vector<Elem>> blocks; // blocks sorted by least member, members ascending

    int size() const { return static_cast<int>(blocks.size()); }
    bool same(Elem a, Elem b) const { return block_of[a] == block_of[b]; }
};

// Normalises an element->block assignment: block ids ordered by least member.
Partition make_partition(const std::vector<int>& assignment);
Partition identity_partition(int n);
Partition single_block(int n);

struct CongruenceVerdict {
    bool c1 = false;                      // partition shape is a genuine equivalence
    bool c2 = false;                      // compatible with (+) where both sums exist
    bool c5 = false;                      // sums lift across classes
    bool c6 = false;                      // compatible with complement
    std::optional<std::array<Elem, 4>> c2_witness;  // (a1, a2, b1, b2)
    std::optional<std::array<Elem, 3>> c5_witness;  // (a, b, c)
    std::optional<std::pair<Elem, Elem>> c6_witness;
    bool is_congruence() const { return c1 && c2 && c5 && c6; }
};

CongruenceVerdict check_congruence(const EffectAlgebra& e, const Partition& p);

struct QuotientResult {
    EffectAlgebra algebra;                // elements are block ids
    std::vector<Elem> canonical_map;      // x -> [x], equals p.block_of
    MorphismFlags canonical_flags;        // must come out full + surjective
};

// [a] (+) [b] = [a1 (+) b1] over representatives; every representative pair
// must agree (IllDefinedSum otherwise), the result is re-validated, and the
// canonical map is checked to be a full surjective morphism.  Requires a
// congruence (NotACongruence otherwise).
QuotientResult quotient(const EffectAlgebra& e, const Partition& p);

struct QuotientOrderEquivalence {
    bool class_leq = false;               // [x] <= [y] in the quotient
    bool lift_left = false;               // some x1 ~ x has x1 <= y
    bool lift_right = false;              // some y1 ~ y has x <= y1
    bool agree() const { return class_leq == lift_left && class_leq == lift_right; }
};

// The three equivalent descriptions of the quotient order, each evaluated
// independently.  Requires a congruence.
QuotientOrderEquivalence congruence_order_lemma(const EffectAlgebra& e, const Partition& p,
                                                Elem x, Elem y);

} // namespace mvrep
