#include "mvrep/dot.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace mvrep {

namespace {

std::string escaped(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

// A fixed-width HSV fill colour keyed by an element index; distinct hues for
// distinct keys keep the phi fibres tellable apart.
std::string fibre_colour(int key, int n) {
    char buf[32];
    double hue = n <= 1 ? 0.0 : 0.85 * key / (n - 1);
    std::snprintf(buf, sizeof buf, "%.3f 0.350 1.000", hue);
    return buf;
}

std::vector<Elem> rank_order(const Poset& p) {
    std::vector<int> ranks = order_ranks(p);
    std::vector<Elem> order(p.n);
    for (Elem x = 0; x < p.n; ++x) order[x] = x;
    std::stable_sort(order.begin(), order.end(),
                     [&](Elem a, Elem b) { return ranks[a] != ranks[b] ? ranks[a] < ranks[b] : a < b; });
    return order;
}

void emit_poset_body(std::ostringstream& out, const Poset& p, const std::string& prefix,
                     const std::vector<std::string>& colours, const std::string& indent) {
    std::vector<std::string> labels(p.n);
    for (Elem x = 0; x < p.n; ++x)
        labels[x] = (x < static_cast<int>(p.labels.size()) && !p.labels[x].empty())
                        ? p.labels[x]
                        : std::to_string(x);
    for (Elem x : rank_order(p)) {
        out << indent << prefix << x << " [label=\"" << escaped(labels[x]) << "\"";
        if (!colours.empty()) out << ", style=filled, fillcolor=\"" << colours[x] << "\"";
        out << "];\n";
    }
    for (auto [a, b] : cover_pairs(p)) out << indent << prefix << a << " -> " << prefix << b << ";\n";
}

} // namespace

std::string dot_poset(const Poset& p, const std::string& graph_name) {
    std::ostringstream out;
    out << "digraph \"" << escaped(graph_name) << "\" {\n";
    out << "  rankdir=BT;\n  node [shape=box];\n";
    emit_poset_body(out, p, "n", {}, "  ");
    out << "}\n";
    return out.str();
}

std::string dot_effect_algebra(const EffectAlgebra& e, const std::string& graph_name) {
    EffectOrder ord = derive_order(e);
    return dot_poset(ord.poset(e), graph_name);
}

std::string dot_representation(const RGen& r, const EffectAlgebra& quotient,
                               const Partition& orbits) {
    std::ostringstream out;
    out << "digraph representation {\n";
    out << "  rankdir=BT;\n  node [shape=box];\n";

    // Colours are keyed by the phi value, so equal colours across the three
    // clusters mean "represents the same element".
    const int n = r.m.n;
    std::vector<std::string> colour_of(n);
    for (Elem x = 0; x < n; ++x) colour_of[x] = fibre_colour(x, n);

    out << "  subgraph cluster_m {\n    label=\"m\";\n";
    {
        Poset p = r.order.poset(r.m);
        std::vector<std::string> colours(n);
        for (Elem x = 0; x < n; ++x) colours[x] = colour_of[x];
        emit_poset_body(out, p, "m", colours, "    ");
    }
    out << "  }\n";

    out << "  subgraph cluster_b {\n    label=\"generated Boolean algebra\";\n";
    {
        const int size = r.bool_alg.size();
        Poset p = Poset::discrete(size);
        for (Mask x = 0; x < static_cast<Mask>(size); ++x)
            for (Mask y = 0; y < static_cast<Mask>(size); ++y)
                if (subset(x, y)) p.set_leq(Elem(x), Elem(y));
        p.labels.resize(size);
        for (Mask x = 0; x < static_cast<Mask>(size); ++x)
            p.labels[x] = r.bool_alg.element_label(x);
        std::vector<std::string> colours(size);
        for (Mask x = 0; x < static_cast<Mask>(size); ++x) colours[x] = colour_of[r.phi(x)];
        emit_poset_body(out, p, "b", colours, "    ");
    }
    out << "  }\n";

    out << "  subgraph cluster_q {\n    label=\"quotient\";\n";
    {
        EffectOrder ord = derive_order(quotient);
        Poset p = ord.poset(quotient);
        p.labels.resize(quotient.n);
        for (int k = 0; k < quotient.n; ++k)
            p.labels[k] = "[" + r.bool_alg.element_label(Mask(orbits.blocks[k][0])) + "]";
        std::vector<std::string> colours(quotient.n);
        for (int k = 0; k < quotient.n; ++k)
            colours[k] = colour_of[r.phi(Mask(orbits.blocks[k][0]))];
        emit_poset_body(out, p, "q", colours, "    ");
    }
    out << "  }\n";

    out << "}\n";
    return out.str();
}

} // namespace mvrep
