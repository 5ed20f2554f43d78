#include "mvrep/rgen.hpp"

#include <algorithm>

namespace mvrep {

namespace {

// Distinct atoms must be separated by some generator; equivalent to the
// generators reaching the whole powerset under complement and meet.
bool image_separates(const std::vector<Mask>& image, int atoms) {
    for (int j = 0; j < atoms; ++j)
        for (int k = j + 1; k < atoms; ++k) {
            bool separated = false;
            for (Mask g : image)
                if (((g >> j) ^ (g >> k)) & 1) {
                    separated = true;
                    break;
                }
            if (!separated) return false;
        }
    return true;
}

// Direct closure computation, used as a cross-check at small scale.
bool image_generates(const std::vector<Mask>& image, int atoms) {
    const Mask full = (Mask(1) << atoms) - 1;
    std::vector<char> in(size_t(1) << atoms, 0);
    std::vector<Mask> work(image.begin(), image.end());
    for (Mask g : image) in[g] = 1;
    for (size_t i = 0; i < work.size(); ++i) {
        Mask x = work[i];
        Mask c = ~x & full;
        if (!in[c]) {
            in[c] = 1;
            work.push_back(c);
        }
        for (size_t j = 0; j <= i; ++j) {
            Mask m = x & work[j];
            if (!in[m]) {
                in[m] = 1;
                work.push_back(m);
            }
        }
    }
    return work.size() == (size_t(1) << atoms);
}

} // namespace

RGen rgenerate(const EffectAlgebra& m, int max_atoms) {
    ValidationReport vr = validate_effect_algebra(m);
    if (!vr.ok()) fail(Errc::invalid_input, "rgenerate needs a valid effect algebra: " + vr.summary());

    RGen r;
    r.m = m;
    r.order = derive_order(m);

    LatticeStructureResult ls = lattice_structure(m);
    if (!ls.lattice) fail(Errc::not_mv_effect, "order is not a lattice");
    MvCharacterizations mc = mv_characterizations(m);
    if (!mc.all()) {
        std::string w;
        if (!mc.b && mc.witness_b)
            w = " (witness a=" + m.label(mc.witness_b->first) + " b=" + m.label(mc.witness_b->second) +
                " with a^b=0, a !<= b')";
        fail(Errc::not_mv_effect, "MV condition fails" + w);
    }
    r.reduct = std::move(*ls.lattice);
    if (!r.reduct.distributive) fail(Errc::not_distributive, "lattice reduct is not distributive");

    r.jis = join_irreducibles(r.reduct);
    const int atoms = static_cast<int>(r.jis.elements.size());
    if (atoms > max_atoms) fail(Errc::cap_exceeded, "join-irreducible count exceeds cap");
    r.bool_alg = BooleanAlg::with_atoms(atoms);
    r.embed = birkhoff_embedding(r.reduct, r.jis);

    // The Birkhoff map is a bounded-lattice embedding.
    check_internal(r.embed[m.zero] == 0 && r.embed[m.one] == r.bool_alg.full(),
                   "embedding misses the bounds");
    r.elem_of_mask.assign(r.bool_alg.size(), kUndef);
    for (Elem x = 0; x < m.n; ++x) {
        check_internal(r.elem_of_mask[r.embed[x]] == kUndef, "embedding is not injective");
        r.elem_of_mask[r.embed[x]] = x;
    }
    for (Elem x = 0; x < m.n; ++x)
        for (Elem y = 0; y < m.n; ++y) {
            check_internal(r.embed[r.reduct.join(x, y)] == (r.embed[x] | r.embed[y]),
                           "embedding does not preserve joins");
            check_internal(r.embed[r.reduct.meet(x, y)] == (r.embed[x] & r.embed[y]),
                           "embedding does not preserve meets");
        }
    check_internal(image_separates(r.embed, atoms), "image does not generate the powerset");
    if (atoms <= 8)
        check_internal(image_generates(r.embed, atoms), "closure check failed");

    // Lower covers of the irreducibles (join of the irreducibles strictly below).
    r.lower_cover_atom.assign(atoms, m.zero);
    for (int k = 0; k < atoms; ++k) {
        Elem acc = m.zero;
        for (int k2 = 0; k2 < atoms; ++k2)
            if (k2 != k && r.reduct.leq(r.jis.elements[k2], r.jis.elements[k]))
                acc = r.reduct.join(acc, r.jis.elements[k2]);
        r.lower_cover_atom[k] = acc;
    }

    // phi from the canonical chains; phi fixes every embedded element.
    r.phi_table.assign(r.bool_alg.size(), kUndef);
    for (Mask x = 0; x < static_cast<Mask>(r.bool_alg.size()); ++x) {
        ChainRep ch = chain_representation(r, x);
        std::optional<Elem> v = phi_of_chain(r.m, r.order, ch.elems);
        check_internal(v.has_value(), "phi undefined on a canonical chain");
        r.phi_table[x] = *v;
    }
    for (Elem x = 0; x < m.n; ++x)
        check_internal(r.phi_table[r.embed[x]] == x, "phi does not fix an embedded element");
    return r;
}

ChainRep chain_representation(const RGen& r, Mask x) {
    if (x >= static_cast<Mask>(r.bool_alg.size())) fail(Errc::invalid_input, "element out of range");
    std::vector<Elem> descending;
    Mask rest = x;
    while (rest) {
        // Least embedded element above rest: the join of its irreducibles.
        Elem c = r.m.zero;
        for (int k = 0; k < r.atom_count(); ++k)
            if (rest >> k & 1) c = r.reduct.join(c, r.atom_elem(k));
        descending.push_back(c);
        Mask cover = r.embed[c];
        check_internal(subset(rest, cover), "cover misses the set");
        rest = cover & ~rest;             // strictly smaller join next round
    }
    ChainRep ch;
    if (descending.size() % 2) descending.push_back(r.m.zero);
    ch.elems.assign(descending.rbegin(), descending.rend());
    return ch;
}

std::optional<Elem> phi_of_chain(const EffectAlgebra& m, const EffectOrder& ord,
                                 const std::vector<Elem>& chain) {
    if (chain.size() % 2) fail(Errc::invalid_input, "chain length must be even");
    for (size_t i = 0; i + 1 < chain.size(); ++i)
        if (!ord.leq(chain[i], chain[i + 1])) fail(Errc::invalid_input, "chain is not non-decreasing");
    Elem acc = m.zero;
    for (size_t i = 0; i < chain.size(); i += 2) {
        Elem d = ord.ominus(chain[i + 1], chain[i]);
        if (d == kUndef) return std::nullopt;
        acc = m.add(acc, d);
        if (acc == kUndef) return std::nullopt;
    }
    return acc;
}

EAMorphism phi_morphism(const RGen& r) {
    EAMorphism em;
    em.map.assign(r.phi_table.begin(), r.phi_table.end());
    EffectAlgebra powerset = boolean_effect_algebra(r.bool_alg);
    em.flags = validate_morphism(powerset, r.m, em.map);
    return em;
}

Mask IntervalIso::apply(Mask x) const {
    if (!subset(x, dom_top)) fail(Errc::invalid_input, "argument outside the domain interval");
    Mask out = 0;
    for (size_t k = 0; k < atom_map.size(); ++k)
        if (x >> k & 1) out |= Mask(1) << atom_map[k];
    return out;
}

IntervalIso IntervalIso::inverse() const {
    IntervalIso inv;
    inv.dom_top = cod_top;
    inv.cod_top = dom_top;
    inv.atom_map.assign(atom_map.size(), -1);
    for (size_t k = 0; k < atom_map.size(); ++k)
        if (atom_map[k] >= 0) inv.atom_map[atom_map[k]] = static_cast<int>(k);
    return inv;
}

namespace {

IntervalIso compose_iso(const IntervalIso& first, const IntervalIso& then) {
    check_internal(first.cod_top == then.dom_top, "composition tops disagree");
    IntervalIso out;
    out.dom_top = first.dom_top;
    out.cod_top = then.cod_top;
    out.atom_map.assign(first.atom_map.size(), -1);
    for (size_t k = 0; k < first.atom_map.size(); ++k)
        if (first.atom_map[k] >= 0) out.atom_map[k] = then.atom_map[first.atom_map[k]];
    return out;
}

void verify_iso(const RGen& r, const IntervalIso& iso) {
    // Bijection between the atom sets of the two intervals.
    Mask seen = 0;
    for (int k = 0; k < r.atom_count(); ++k) {
        bool in_dom = (iso.dom_top >> k & 1) != 0;
        check_internal(in_dom == (iso.atom_map[k] >= 0), "atom map does not match the domain");
        if (in_dom) {
            Mask img = Mask(1) << iso.atom_map[k];
            check_internal(subset(img, iso.cod_top) && !(seen & img), "atom images not a bijection");
            seen |= img;
        }
    }
    check_internal(seen == iso.cod_top, "atom images do not cover the codomain");
    check_internal(phi_preserving(r, iso), "interval isomorphism does not preserve phi");
}

} // namespace

bool phi_preserving(const RGen& r, const IntervalIso& iso) {
    // Exhaustive over the subsets of dom_top.
    for (Mask z = iso.dom_top;; z = (z - 1) & iso.dom_top) {
        if (r.phi(z) != r.phi(iso.apply(z))) return false;
        if (z == 0) break;
    }
    return true;
}

IntervalIso translate_iso(const RGen& r, Elem c, Elem d) {
    if (c < 0 || c >= r.m.n || d < 0 || d >= r.m.n) fail(Errc::invalid_input, "element out of range");
    if (!r.order.leq(d, c)) fail(Errc::not_comparable, "translation needs d <= c");
    const Elem e = r.order.ominus(c, d);

    IntervalIso iso;
    iso.dom_top = r.embed[e];
    iso.cod_top = r.embed[c] & ~r.embed[d];
    iso.atom_map.assign(r.atom_count(), -1);

    auto psi0 = [&](Elem x) {             // embed(x + d) \ embed(d), for x <= e
        Elem xd = r.m.add(x, d);
        check_internal(xd != kUndef, "translation sum undefined");
        return r.embed[xd] & ~r.embed[d];
    };
    for (int k = 0; k < r.atom_count(); ++k) {
        if (!(iso.dom_top >> k & 1)) continue;
        Mask img = psi0(r.atom_elem(k)) & ~psi0(r.lower_cover_atom[k]);
        check_internal(popcount(img) == 1, "translated atom is not an atom");
        iso.atom_map[k] = __builtin_ctz(img);
    }
    // The Boolean extension restricted to embedded elements equals psi0.
    for (Elem x = 0; x < r.m.n; ++x)
        if (r.order.leq(x, e)) check_internal(iso.apply(r.embed[x]) == psi0(x), "extension mismatch");
    verify_iso(r, iso);
    return iso;
}

IntervalIso translate_between(const RGen& r, Elem c1, Elem d1, Elem c2, Elem d2) {
    if (!r.order.leq(d1, c1) || !r.order.leq(d2, c2)) fail(Errc::not_comparable, "needs d <= c");
    if (r.order.ominus(c1, d1) != r.order.ominus(c2, d2))
        fail(Errc::invalid_input, "the two translations have different cores");
    IntervalIso out = compose_iso(translate_iso(r, c1, d1).inverse(), translate_iso(r, c2, d2));
    verify_iso(r, out);
    return out;
}

IntervalIso interval_iso(const RGen& r, Mask a) {
    ChainRep ch = chain_representation(r, a);
    IntervalIso iso;
    iso.dom_top = 0;
    iso.cod_top = 0;
    iso.atom_map.assign(r.atom_count(), -1);

    Elem b_prev = r.m.zero;
    for (size_t i = 0; i < ch.elems.size(); i += 2) {
        const Elem lo = ch.elems[i], hi = ch.elems[i + 1];
        const Elem step = r.order.ominus(hi, lo);
        const Elem b_next = r.m.add(b_prev, step);
        check_internal(b_next != kUndef, "prefix sum of chain steps undefined");
        // [0, embed(b_next)\embed(b_prev)] -> [0, embed(hi)\embed(lo)]
        IntervalIso block = translate_between(r, b_next, b_prev, hi, lo);
        check_internal((iso.dom_top & block.dom_top) == 0 && (iso.cod_top & block.cod_top) == 0,
                       "chain blocks overlap");
        iso.dom_top |= block.dom_top;
        iso.cod_top |= block.cod_top;
        for (int k = 0; k < r.atom_count(); ++k)
            if (block.atom_map[k] >= 0) iso.atom_map[k] = block.atom_map[k];
        b_prev = b_next;
    }
    check_internal(iso.dom_top == r.embed[r.phi(a)], "domain is not [0, embed(phi(a))]");
    check_internal(iso.cod_top == a, "codomain is not [0, a]");
    verify_iso(r, iso);
    return iso;
}

IntervalIso between_iso(const RGen& r, Mask a, Mask b) {
    if (r.phi(a) != r.phi(b))
        fail(Errc::phi_mismatch, "phi(" + r.bool_alg.element_label(a) + ") != phi(" +
                                     r.bool_alg.element_label(b) + ")");
    IntervalIso out = compose_iso(interval_iso(r, a).inverse(), interval_iso(r, b));
    verify_iso(r, out);
    return out;
}

EffectAlgebra interval_algebra_of(const RGen& r, Mask top) {
    return interval_effect_algebra(r.bool_alg, bool_interval(r.bool_alg, top));
}

std::vector<Elem> interval_iso_as_map(const RGen& r, const IntervalIso& iso) {
    BoolInterval dom = bool_interval(r.bool_alg, iso.dom_top);
    BoolInterval cod = bool_interval(r.bool_alg, iso.cod_top);
    std::vector<Elem> map(dom.elems.size(), kUndef);
    for (size_t i = 0; i < dom.elems.size(); ++i) map[i] = cod.index_of(iso.apply(dom.elems[i]));
    return map;
}

} // namespace mvrep
