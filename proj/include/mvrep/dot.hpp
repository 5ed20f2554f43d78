// Graphviz export of Hasse diagrams.  Nodes are emitted in (rank, index)
// order so the output is stable byte for byte.
#pragma once

#include <string>
#include <vector>

#include "mvrep/rgen.hpp"

namespace mvrep {

std::string dot_poset(const Poset& p, const std::string& graph_name);
std::string dot_effect_algebra(const EffectAlgebra& e, const std::string& graph_name);

// One graph with three clusters: m, the generated Boolean algebra with the
// phi fibres coloured, and the quotient by the phi-preserving group.
std::string dot_representation(const RGen& r, const EffectAlgebra& quotient,
                               const Partition& orbits);

} // namespace mvrep
