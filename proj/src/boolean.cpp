#include "mvrep/boolean.hpp"

#include <sstream>

namespace mvrep {

BooleanAlg BooleanAlg::with_atoms(int atoms) {
    if (atoms < 0 || atoms > 20) fail(Errc::cap_exceeded, "atom count out of range");
    BooleanAlg b;
    b.atoms = atoms;
    b.atom_labels.resize(atoms);
    for (int k = 0; k < atoms; ++k) b.atom_labels[k] = "j" + std::to_string(k);
    return b;
}

std::string BooleanAlg::element_label(Mask x) const {
    std::ostringstream out;
    out << "{";
    bool first = true;
    for (int k = 0; k < atoms; ++k)
        if (x >> k & 1) {
            if (!first) out << ",";
            out << (k < static_cast<int>(atom_labels.size()) ? atom_labels[k]
                                                             : "j" + std::to_string(k));
            first = false;
        }
    out << "}";
    return out.str();
}

EffectAlgebra boolean_effect_algebra(const BooleanAlg& b) {
    const int size = b.size();
    EffectAlgebra e = EffectAlgebra::empty_table(size, 0, static_cast<Elem>(b.full()));
    e.name = "2^" + std::to_string(b.atoms);
    e.labels.resize(size);
    for (Mask x = 0; x < static_cast<Mask>(size); ++x) e.labels[x] = b.element_label(x);
    for (Mask x = 0; x < static_cast<Mask>(size); ++x)
        for (Mask y = 0; y < static_cast<Mask>(size); ++y)
            if (!(x & y)) e.sum[static_cast<size_t>(x) * size + y] = static_cast<Elem>(x | y);
    return e;
}

BoolInterval bool_interval(const BooleanAlg& b, Mask top) {
    BoolInterval iv;
    iv.top = top;
    iv.index_of_.assign(b.size(), -1);
    // Ascending numeric order of all submasks of top.
    for (Mask x = 0; x < static_cast<Mask>(b.size()); ++x)
        if (subset(x, top)) {
            iv.index_of_[x] = static_cast<int>(iv.elems.size());
            iv.elems.push_back(x);
        }
    return iv;
}

EffectAlgebra interval_effect_algebra(const BooleanAlg& b, const BoolInterval& iv) {
    const int size = static_cast<int>(iv.elems.size());
    EffectAlgebra e = EffectAlgebra::empty_table(size, iv.index_of(0), iv.index_of(iv.top));
    e.name = "interval[0," + b.element_label(iv.top) + "]";
    e.labels.resize(size);
    for (int i = 0; i < size; ++i) e.labels[i] = b.element_label(iv.elems[i]);
    for (int i = 0; i < size; ++i)
        for (int j = 0; j < size; ++j)
            if (!(iv.elems[i] & iv.elems[j]))
                e.sum[static_cast<size_t>(i) * size + j] = iv.index_of(iv.elems[i] | iv.elems[j]);
    return e;
}

} // namespace mvrep
