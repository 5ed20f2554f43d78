#include "mvrep/order.hpp"

#include <algorithm>
#include <sstream>

namespace mvrep {

std::string errc_name(Errc c) {
    switch (c) {
        case Errc::invalid_input: return "InvalidInput";
        case Errc::parse_error: return "ParseError";
        case Errc::unknown_name: return "UnknownName";
        case Errc::not_a_lattice: return "NotALattice";
        case Errc::no_bounds: return "NoBounds";
        case Errc::not_distributive: return "NotDistributive";
        case Errc::not_lattice_ordered: return "NotLatticeOrdered";
        case Errc::not_mv_effect: return "NotMvEffect";
        case Errc::mv_axiom_violation: return "MvAxiomViolation";
        case Errc::not_a_congruence: return "NotACongruence";
        case Errc::ill_defined_sum: return "IllDefinedSum";
        case Errc::not_comparable: return "NotComparable";
        case Errc::phi_mismatch: return "PhiMismatch";
        case Errc::not_mv_pair: return "NotMvPair";
        case Errc::cap_exceeded: return "CapExceeded";
        case Errc::internal_error: return "InternalError";
    }
    return "UnknownError";
}

std::string join_ints(const std::vector<int>& v, const std::string& sep) {
    std::ostringstream out;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out << sep;
        out << v[i];
    }
    return out.str();
}

Poset Poset::discrete(int n) {
    Poset p;
    p.n = n;
    p.leq_.assign(static_cast<size_t>(n) * n, 0);
    for (Elem a = 0; a < n; ++a) p.set_leq(a, a);
    return p;
}

void Poset::close() {
    for (Elem a = 0; a < n; ++a) set_leq(a, a);
    // Floyd-Warshall style reachability closure.
    for (Elem k = 0; k < n; ++k)
        for (Elem a = 0; a < n; ++a)
            if (leq(a, k))
                for (Elem b = 0; b < n; ++b)
                    if (leq(k, b)) set_leq(a, b);
}

PosetReport validate_poset(const Poset& p) {
    PosetReport rep;
    if (p.n <= 0 || p.leq_.size() != static_cast<size_t>(p.n) * p.n) {
        rep.violations.push_back({"shape", {}});
        return rep;
    }
    for (Elem a = 0; a < p.n; ++a) {
        if (!p.leq(a, a)) {
            rep.violations.push_back({"reflexivity", {a}});
            break;
        }
    }
    bool done = false;
    for (Elem a = 0; a < p.n && !done; ++a)
        for (Elem b = 0; b < p.n && !done; ++b)
            if (a != b && p.leq(a, b) && p.leq(b, a)) {
                rep.violations.push_back({"antisymmetry", {a, b}});
                done = true;
            }
    done = false;
    for (Elem a = 0; a < p.n && !done; ++a)
        for (Elem b = 0; b < p.n && !done; ++b)
            if (p.leq(a, b))
                for (Elem c = 0; c < p.n; ++c)
                    if (p.leq(b, c) && !p.leq(a, c)) {
                        rep.violations.push_back({"transitivity", {a, b, c}});
                        done = true;
                        break;
                    }
    return rep;
}

LatticeBuildResult lattice_from_poset(const Poset& p) {
    LatticeBuildResult res;
    const int n = p.n;
    if (!validate_poset(p).ok()) fail(Errc::invalid_input, "lattice_from_poset needs a valid poset");

    BoundedLattice l;
    l.poset = p;
    l.join_.assign(static_cast<size_t>(n) * n, kUndef);
    l.meet_.assign(static_cast<size_t>(n) * n, kUndef);

    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b) {
            Elem jn = kUndef, mt = kUndef;
            // Walk down to a minimal upper bound, then confirm it is least.
            for (Elem u = 0; u < n; ++u) {
                if (!(p.leq(a, u) && p.leq(b, u))) continue;
                if (jn == kUndef || p.leq(u, jn)) jn = u;
            }
            if (jn != kUndef)
                for (Elem u = 0; u < n; ++u)
                    if (p.leq(a, u) && p.leq(b, u) && !p.leq(jn, u)) { jn = kUndef; break; }
            for (Elem u = 0; u < n; ++u) {
                if (!(p.leq(u, a) && p.leq(u, b))) continue;
                if (mt == kUndef || p.leq(mt, u)) mt = u;
            }
            if (mt != kUndef)
                for (Elem u = 0; u < n; ++u)
                    if (p.leq(u, a) && p.leq(u, b) && !p.leq(u, mt)) { mt = kUndef; break; }
            if (jn == kUndef || mt == kUndef) {
                if (!res.witness) {
                    res.witness = {a, b};
                    res.detail = (jn == kUndef) ? "no least upper bound" : "no greatest lower bound";
                }
                continue;
            }
            l.join_[static_cast<size_t>(a) * n + b] = jn;
            l.meet_[static_cast<size_t>(a) * n + b] = mt;
        }
    if (res.witness) return res;

    l.bottom = 0;
    l.top = 0;
    for (Elem a = 0; a < n; ++a) {
        l.bottom = l.meet(l.bottom, a);
        l.top = l.join(l.top, a);
    }
    bool bounds_ok = true;
    for (Elem a = 0; a < n; ++a)
        if (!p.leq(l.bottom, a) || !p.leq(a, l.top)) bounds_ok = false;
    if (!bounds_ok) {
        res.detail = "no global bounds";
        res.witness = {0, 0};
        return res;
    }

    l.distributive = true;
    for (Elem x = 0; x < n && l.distributive; ++x)
        for (Elem y = 0; y < n && l.distributive; ++y)
            for (Elem z = 0; z < n; ++z)
                if (l.meet(x, l.join(y, z)) != l.join(l.meet(x, y), l.meet(x, z))) {
                    l.distributive = false;
                    l.distrib_witness = {x, y, z};
                    break;
                }
    res.lattice = std::move(l);
    return res;
}

JoinIrreducibleSet join_irreducibles(const BoundedLattice& l) {
    if (!l.distributive) {
        std::string w = l.distrib_witness
                            ? "witness (" + join_ints({(*l.distrib_witness)[0], (*l.distrib_witness)[1],
                                                       (*l.distrib_witness)[2]}) + ")"
                            : "";
        fail(Errc::not_distributive, "join-irreducible representation needs a distributive lattice " + w);
    }
    const int n = l.n();
    JoinIrreducibleSet jis;
    for (Elem j = 0; j < n; ++j) {
        if (j == l.bottom) continue;
        bool irreducible = true;
        for (Elem a = 0; a < n && irreducible; ++a)
            for (Elem b = 0; b < n; ++b)
                if (l.join(a, b) == j && a != j && b != j) {
                    irreducible = false;
                    break;
                }
        if (irreducible) jis.elements.push_back(j);
    }
    // Every element must be the join of the irreducibles below it.
    for (Elem x = 0; x < n; ++x) {
        Elem acc = l.bottom;
        for (Elem j : jis.elements)
            if (l.leq(j, x)) acc = l.join(acc, j);
        check_internal(acc == x, "element is not the join of irreducibles below it");
    }
    return jis;
}

std::vector<Mask> birkhoff_embedding(const BoundedLattice& l, const JoinIrreducibleSet& jis) {
    const int n = l.n();
    if (jis.elements.size() > 31) fail(Errc::cap_exceeded, "too many join-irreducibles for mask representation");
    std::vector<Mask> embed(n, 0);
    for (Elem x = 0; x < n; ++x)
        for (size_t k = 0; k < jis.elements.size(); ++k)
            if (l.leq(jis.elements[k], x)) embed[x] |= Mask(1) << k;
    return embed;
}

std::vector<int> order_ranks(const Poset& p) {
    const int n = p.n;
    std::vector<int> rank(n, 0);
    // Longest chain ending at each element; n passes suffice at this scale.
    bool changed = true;
    while (changed) {
        changed = false;
        for (Elem a = 0; a < n; ++a)
            for (Elem b = 0; b < n; ++b)
                if (a != b && p.leq(a, b) && rank[b] < rank[a] + 1) {
                    rank[b] = rank[a] + 1;
                    changed = true;
                }
    }
    return rank;
}

std::vector<std::pair<Elem, Elem>> cover_pairs(const Poset& p) {
    std::vector<std::pair<Elem, Elem>> covers;
    for (Elem a = 0; a < p.n; ++a)
        for (Elem b = 0; b < p.n; ++b) {
            if (a == b || !p.leq(a, b)) continue;
            bool cover = true;
            for (Elem c = 0; c < p.n; ++c)
                if (c != a && c != b && p.leq(a, c) && p.leq(c, b)) {
                    cover = false;
                    break;
                }
            if (cover) covers.push_back({a, b});
        }
    return covers;
}

} // namespace mvrep
