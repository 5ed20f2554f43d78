// Text formats for posets/lattices, effect algebras and (B, G) pairs, plus
// small parsing helpers shared with the CLI.  Parse errors carry the
// offending line number.
#pragma once

#include <iosfwd>
#include <string>
#include <variant>

#include "mvrep/catalog.hpp"

namespace mvrep {

// lattice <name> / elements <k> / label <i> <text> / leq <i> <j>
// The declared relation is closed reflexively and transitively.
Poset parse_lattice_text(std::istream& in, std::string* name_out = nullptr);

// effect-algebra <name> / elements <k> / zero <i> / one <i> / sum <i> <j> <k>
// Symmetric entries are filled in automatically; contradictory duplicates
// are parse errors.
EffectAlgebra parse_effect_algebra_text(std::istream& in);

// bg-pair <name> / atoms <n> / generator <i0 i1 ... i_{n-1}>
BGPair parse_bg_pair_text(std::istream& in);

std::string serialize_lattice(const Poset& p, const std::string& name);
std::string serialize_effect_algebra(const EffectAlgebra& e);
std::string serialize_bg_pair(const BGPair& p);

struct ParsedFile {
    std::variant<Poset, EffectAlgebra, BGPair> value;
    std::string kind;                     // "lattice" | "effect-algebra" | "bg-pair"
    std::string name;
};

// Dispatches on the header keyword of the first significant line.
ParsedFile parse_any_file(const std::string& path);

// Atom-set literals like "{j0,j2}", "{1,3}" or "{}".
Mask parse_atom_set(const std::string& text, const BooleanAlg& alg);

} // namespace mvrep
