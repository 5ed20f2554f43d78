// Finite Boolean algebras realised as powersets of an atom set.  Elements
// are bitmasks; the difference x \ y is partial and only defined on
// comparable pairs, matching how it is used throughout the construction.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mvrep/effect.hpp"

namespace mvrep {

struct BooleanAlg {
    int atoms = 0;
    std::vector<std::string> atom_labels; // defaults j0, j1, ...

    Mask full() const { return (atoms >= 32) ? ~Mask(0) : ((Mask(1) << atoms) - 1); }
    int size() const { return 1 << atoms; }

    Mask meet(Mask x, Mask y) const { return x & y; }
    Mask join(Mask x, Mask y) const { return x | y; }
    Mask complement(Mask x) const { return ~x & full(); }
    Mask symdiff(Mask x, Mask y) const { return x ^ y; }
    // Disjoint join (the effect-algebra sum); defined iff x ^ y = 0.
    std::optional<Mask> djoin(Mask x, Mask y) const {
        if (x & y) return std::nullopt;
        return x | y;
    }
    // Difference, defined exactly on comparable pairs (y <= x).
    Mask diff(Mask x, Mask y) const {
        if (!subset(y, x)) fail(Errc::not_comparable, "difference needs y <= x");
        return x & ~y;
    }

    std::string element_label(Mask x) const;

    static BooleanAlg with_atoms(int atoms);
};

// The powerset of `atoms` atoms as an effect algebra: element index == mask,
// sum = disjoint union.
EffectAlgebra boolean_effect_algebra(const BooleanAlg& b);

// The Boolean interval [0, top]: elements are the submasks of `top` in
// ascending numeric order, with disjoint union as sum.
struct BoolInterval {
    Mask top = 0;
    std::vector<Mask> elems;
    std::vector<int> index_of_;           // mask -> index within elems (dense over 2^atoms)

    int index_of(Mask x) const { return index_of_[x]; }
};

BoolInterval bool_interval(const BooleanAlg& b, Mask top);
EffectAlgebra interval_effect_algebra(const BooleanAlg& b, const BoolInterval& iv);

} // namespace mvrep
