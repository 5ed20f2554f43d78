// The Boolean algebra generated by an MV-effect algebra: powerset of the
// join-irreducibles via the Birkhoff map, canonical chain representations,
// the morphism phi, and the phi-preserving interval isomorphisms used by the
// representation theorem.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mvrep/boolean.hpp"
#include "mvrep/congruence.hpp"

namespace mvrep {

struct RGen {
    EffectAlgebra m;                      // the MV-effect algebra
    EffectOrder order;                    // its derived order
    BoundedLattice reduct;                // its lattice reduct
    JoinIrreducibleSet jis;               // atom k <-> m-element jis.elements[k]
    BooleanAlg bool_alg;
    std::vector<Mask> embed;              // m-element -> atom set of irreducibles below it
    std::vector<Elem> elem_of_mask;       // inverse of embed, kUndef off the image
    std::vector<Elem> phi_table;          // mask -> m-element, built from canonical chains
    std::vector<Elem> lower_cover_atom;   // atom k -> m-element: join of irreducibles strictly below

    int atom_count() const { return bool_alg.atoms; }
    Elem atom_elem(int k) const { return jis.elements[k]; }
    Elem phi(Mask x) const { return phi_table[x]; }
};

// Builds the generated Boolean algebra for an MV-effect algebra.  Verifies
// on the way: the Birkhoff map is a bounded-lattice embedding, its image
// generates the whole powerset under complement and meet, and phi fixes
// every embedded element.  Errors: NotMvEffect (including non-lattice
// orders), NotDistributive, CapExceeded above `max_atoms` irreducibles.
RGen rgenerate(const EffectAlgebra& m, int max_atoms = 16);

struct ChainRep {
    std::vector<Elem> elems;              // non-decreasing, even length, possibly empty
};

// Canonical chain representation of x: the greedy descent by least embedded
// cover.  The result is a strictly increasing even-length chain whose
// embedded symmetric difference reproduces x.
ChainRep chain_representation(const RGen& r, Mask x);

// Evaluates (x2 (-) x1) (+) (x4 (-) x3) (+) ... for an arbitrary
// non-decreasing even-length chain; nullopt when some partial sum is
// undefined.
std::optional<Elem> phi_of_chain(const EffectAlgebra& m, const EffectOrder& ord,
                                 const std::vector<Elem>& chain);

struct EAMorphism {
    std::vector<Elem> map;
    MorphismFlags flags;
};

// phi as a morphism record onto m (source: the powerset effect algebra).
EAMorphism phi_morphism(const RGen& r);

// A Boolean isomorphism between intervals [0, dom_top] and [0, cod_top],
// stored as a bijection of the atoms under dom_top.
struct IntervalIso {
    Mask dom_top = 0, cod_top = 0;
    std::vector<int> atom_map;            // atom index -> atom index, -1 outside dom_top

    Mask apply(Mask x) const;
    IntervalIso inverse() const;
};

// Checks phi(z) = phi(iso(z)) for every z <= dom_top.
bool phi_preserving(const RGen& r, const IntervalIso& iso);

// The translation isomorphism for d <= c: the Boolean extension of
// x |-> embed(x (+) d) \ embed(d), mapping [0, embed(c (-) d)] onto
// [0, embed(c) \ embed(d)].  Error NotComparable when d !<= c.
IntervalIso translate_iso(const RGen& r, Elem c, Elem d);

// Composes two translations sharing c1 (-) d1 = c2 (-) d2 into one
// phi-preserving isomorphism [0, embed(c1)\embed(d1)] -> [0, embed(c2)\embed(d2)].
IntervalIso translate_between(const RGen& r, Elem c1, Elem d1, Elem c2, Elem d2);

// The blockwise isomorphism [0, embed(phi(a))] -> [0, a] assembled from the
// canonical chain of a, one translation pair per chain step.
IntervalIso interval_iso(const RGen& r, Mask a);

// For phi(a) = phi(b): the phi-preserving isomorphism [0,a] -> [0,b].
IntervalIso between_iso(const RGen& r, Mask a, Mask b);

// Views an interval isomorphism as an effect-algebra morphism between the
// two interval effect algebras (for validate_morphism).
EffectAlgebra interval_algebra_of(const RGen& r, Mask top);
std::vector<Elem> interval_iso_as_map(const RGen& r, const IntervalIso& iso);

} // namespace mvrep
