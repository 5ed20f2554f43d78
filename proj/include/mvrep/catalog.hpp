// Named instances used by the suites and the CLI, plus exhaustive
// enumerators for small effect algebras and (B, G) pairs.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mvrep/bg_pair.hpp"

namespace mvrep {

enum class EntryKind { effect_algebra, lattice, bg_pair };

struct ExpectedProperties {
    std::optional<bool> lattice_ordered, distributive, is_mv, rdp, rip, is_mv_pair;
    std::string expected_quotient;        // catalog name, empty when not applicable
    std::optional<int> join_irreducibles;
};

struct CatalogEntry {
    std::string name;
    EntryKind kind = EntryKind::effect_algebra;
    std::string description;
    ExpectedProperties expected;

    // Exactly one of these is populated, depending on kind.
    EffectAlgebra algebra;
    Poset lattice_poset;
    BGPair pair;
};

// Constructors for the standard instances.
EffectAlgebra luka_chain(int n);                 // n elements, 0..1 in steps of 1/(n-1)
EffectAlgebra boolean_algebra_ea(int atoms);
EffectAlgebra product_ea(const EffectAlgebra& a, const EffectAlgebra& b);
EffectAlgebra mo2();

const std::vector<CatalogEntry>& catalog_entries();
const CatalogEntry& builtin(const std::string& name);  // UnknownName on miss

// All effect algebras with 2..max_n elements up to isomorphism, by
// backtracking over sum tables with axiom pruning and isomorphism rejection.
// Exhaustive for max_n <= 6; beyond that a seeded random sample of the
// search tree is taken instead.
std::vector<EffectAlgebra> enumerate_effect_algebras(int max_n, std::uint64_t seed = 0,
                                                     int sample_limit = 64);

// All pairs (2^n, H) for n = 1..max_atoms with H a subgroup of the full
// symmetric group, up to conjugacy.
std::vector<BGPair> enumerate_bg_pairs(int max_atoms);

} // namespace mvrep
