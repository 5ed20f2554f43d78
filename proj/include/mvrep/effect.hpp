// Effect algebras: axioms (E1)-(E4), the derived order and partial
// difference, lattice-orderedness, the four equivalent MV conditions, Riesz
// decomposition/interpolation, the MV-algebra correspondence, morphism
// validation and isomorphism search.
#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "mvrep/order.hpp"

namespace mvrep {

struct EffectAlgebra {
    int n = 0;
    Elem zero = 0, one = 0;
    std::vector<Elem> sum;                // n*n, kUndef where the sum is not defined
    std::vector<std::string> labels;
    std::string name;

    Elem add(Elem a, Elem b) const { return sum[static_cast<size_t>(a) * n + b]; }
    bool defined(Elem a, Elem b) const { return add(a, b) != kUndef; }
    void set_sum(Elem a, Elem b, Elem v) {
        sum[static_cast<size_t>(a) * n + b] = v;
        sum[static_cast<size_t>(b) * n + a] = v;
    }
    std::string label(Elem a) const;

    static EffectAlgebra empty_table(int n, Elem zero, Elem one);
};

struct AxiomViolation {
    std::string axiom;                    // "E1", "E2", "E3", "E4", "cancellativity", "shape"
    std::vector<Elem> witness;
    std::string detail;
};

struct ValidationReport {
    std::vector<AxiomViolation> violations;
    bool ok() const { return violations.empty(); }
    std::string summary() const;
};

// Exhaustive axiom scan; every violated axiom is reported with its least
// witness tuple.  Cancellativity is derivable from (E1)-(E4) but is checked
// anyway, which keeps fault diagnostics sharp.
ValidationReport validate_effect_algebra(const EffectAlgebra& e);

// Derived order a <= b iff a (+) c = b for some c, with the induced partial
// difference and the complement map a' (the unique c with a (+) c = 1).
struct EffectOrder {
    int n = 0;
    std::vector<char> leq_;
    std::vector<Elem> ominus_;            // ominus_[b*n+a] = b (-) a, kUndef if a !<= b
    std::vector<Elem> prime;              // complement map

    bool leq(Elem a, Elem b) const { return leq_[static_cast<size_t>(a) * n + b] != 0; }
    Elem ominus(Elem b, Elem a) const { return ominus_[static_cast<size_t>(b) * n + a]; }
    Poset poset(const EffectAlgebra& e) const;
};

// Requires a valid effect algebra.
EffectOrder derive_order(const EffectAlgebra& e);

struct LatticeStructureResult {
    std::optional<BoundedLattice> lattice;
    std::optional<std::pair<Elem, Elem>> witness;  // least pair without join or meet
};

// Completes the derived order to a lattice when possible.
LatticeStructureResult lattice_structure(const EffectAlgebra& e);

// The four equivalent conditions for a lattice-ordered effect algebra to be
// MV: (a) (a v b) (-) a = b (-) (a ^ b); (b) a ^ b = 0 implies a <= b';
// (c) a (-) (a ^ b) <= b'; (d) every pair decomposes as a = a1 (+) c,
// b = b1 (+) c with a1 (+) b1 (+) c defined.
struct MvCharacterizations {
    bool a = false, b = false, c = false, d = false;
    std::optional<std::pair<Elem, Elem>> witness_a, witness_b, witness_c, witness_d;
    bool all() const { return a && b && c && d; }
};

// Throws NotLatticeOrdered when the derived order is not a lattice.
MvCharacterizations mv_characterizations(const EffectAlgebra& e);

// Convenience: lattice-ordered and all four conditions hold.
bool is_mv_effect(const EffectAlgebra& e);

struct RieszResult {
    bool rdp = false;
    bool rip = false;
    std::optional<std::array<Elem, 3>> rdp_witness;   // least (u, v1, v2)
    std::optional<std::array<Elem, 4>> rip_witness;   // least (u1, u2, v1, v2)
};

// Riesz decomposition and interpolation by exhaustive scan of the derived
// order; no lattice assumption.
RieszResult riesz_properties(const EffectAlgebra& e);

// Total-operation MV-algebra (M; boxplus, neg, 0).
struct MvAlgebra {
    int n = 0;
    Elem zero = 0;
    std::vector<Elem> boxplus;            // n*n, total
    std::vector<Elem> neg;
    std::vector<std::string> labels;
    std::string name;

    Elem bp(Elem a, Elem b) const { return boxplus[static_cast<size_t>(a) * n + b]; }
};

struct MvAlgebraReport {
    std::vector<AxiomViolation> violations;  // axiom in {"assoc","comm","zero","neg-invol","absorb","lukasiewicz","shape"}
    bool ok() const { return violations.empty(); }
};

MvAlgebraReport validate_mv_algebra(const MvAlgebra& m);

// x boxplus y = x (+) (x' ^ y).  Requires an MV-effect algebra.
MvAlgebra to_mv_algebra(const EffectAlgebra& e);

// Restricts boxplus to the pairs with x <= neg(y); requires valid MV axioms,
// re-validates the resulting partial structure.
EffectAlgebra from_mv_algebra(const MvAlgebra& m);

// Effect-algebra morphism flags, all computed exhaustively.  "Full" means:
// whenever phi(a) and phi(b) are orthogonal with sum in the image, some
// orthogonal preimage pair maps to them.
struct MorphismFlags {
    bool total_ok = false;                // map well-shaped (indices in range)
    bool is_morphism = false;             // preserves 1 and all defined sums
    bool is_full = false;
    bool is_injective = false;
    bool is_surjective = false;
    std::optional<std::pair<Elem, Elem>> morphism_witness;
    std::optional<std::pair<Elem, Elem>> full_witness;
    bool is_isomorphism() const { return is_morphism && is_full && is_injective && is_surjective; }
};

MorphismFlags validate_morphism(const EffectAlgebra& src, const EffectAlgebra& dst,
                                const std::vector<Elem>& map);

// Backtracking isomorphism search over sum tables.  Zero and one are pinned,
// complements force images of complements, and candidates are pruned by
// order rank and row profile.  Returns the least map in lexicographic order
// of images, or nullopt.
std::optional<std::vector<Elem>> find_isomorphism(const EffectAlgebra& a, const EffectAlgebra& b);

} // namespace mvrep
