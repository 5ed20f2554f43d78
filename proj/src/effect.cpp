#include "mvrep/effect.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace mvrep {

std::string EffectAlgebra::label(Elem a) const {
    if (a >= 0 && a < static_cast<int>(labels.size()) && !labels[a].empty()) return labels[a];
    return std::to_string(a);
}

EffectAlgebra EffectAlgebra::empty_table(int n, Elem zero, Elem one) {
    EffectAlgebra e;
    e.n = n;
    e.zero = zero;
    e.one = one;
    e.sum.assign(static_cast<size_t>(n) * n, kUndef);
    return e;
}

std::string ValidationReport::summary() const {
    if (ok()) return "valid";
    std::ostringstream out;
    for (size_t i = 0; i < violations.size(); ++i) {
        if (i) out << "; ";
        out << violations[i].axiom << " at (" << join_ints(violations[i].witness) << ")";
    }
    return out.str();
}

ValidationReport validate_effect_algebra(const EffectAlgebra& e) {
    ValidationReport rep;
    const int n = e.n;
    if (n <= 0 || e.sum.size() != static_cast<size_t>(n) * n || e.zero < 0 || e.zero >= n ||
        e.one < 0 || e.one >= n) {
        rep.violations.push_back({"shape", {}, "bad table dimensions or constants"});
        return rep;
    }
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b) {
            Elem v = e.add(a, b);
            if (v != kUndef && (v < 0 || v >= n)) {
                rep.violations.push_back({"shape", {a, b}, "sum value out of range"});
                return rep;
            }
        }

    // E1: a+b defined iff b+a defined, with equal values.
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b)
            if (e.add(a, b) != e.add(b, a)) {
                rep.violations.push_back({"E1", {a, b}, "commutativity"});
                goto e1_done;
            }
e1_done:;

    // E2: a+b and (a+b)+c defined  =>  b+c and a+(b+c) defined and equal.
    {
        bool found = false;
        for (Elem a = 0; a < n && !found; ++a)
            for (Elem b = 0; b < n && !found; ++b) {
                Elem ab = e.add(a, b);
                if (ab == kUndef) continue;
                for (Elem c = 0; c < n; ++c) {
                    Elem abc = e.add(ab, c);
                    if (abc == kUndef) continue;
                    Elem bc = e.add(b, c);
                    if (bc == kUndef || e.add(a, bc) != abc) {
                        rep.violations.push_back({"E2", {a, b, c}, "associativity"});
                        found = true;
                        break;
                    }
                }
            }
    }

    // E3: every a has exactly one complement.
    for (Elem a = 0; a < n; ++a) {
        int count = 0;
        for (Elem b = 0; b < n; ++b)
            if (e.add(a, b) == e.one) ++count;
        if (count != 1) {
            rep.violations.push_back({"E3", {a}, count == 0 ? "no complement" : "multiple complements"});
            break;
        }
    }

    // E4: a+1 defined => a = 0.
    for (Elem a = 0; a < n; ++a)
        if (a != e.zero && e.defined(a, e.one)) {
            rep.violations.push_back({"E4", {a}, "sum with top"});
            break;
        }

    // Cancellativity (derivable, checked anyway): a+b = a+c => b = c.
    {
        bool found = false;
        for (Elem a = 0; a < n && !found; ++a)
            for (Elem b = 0; b < n && !found; ++b) {
                Elem ab = e.add(a, b);
                if (ab == kUndef) continue;
                for (Elem c = b + 1; c < n; ++c)
                    if (e.add(a, c) == ab) {
                        rep.violations.push_back({"cancellativity", {a, b, c}, ""});
                        found = true;
                        break;
                    }
            }
    }
    return rep;
}

EffectOrder derive_order(const EffectAlgebra& e) {
    const int n = e.n;
    EffectOrder ord;
    ord.n = n;
    ord.leq_.assign(static_cast<size_t>(n) * n, 0);
    ord.ominus_.assign(static_cast<size_t>(n) * n, kUndef);
    ord.prime.assign(n, kUndef);
    for (Elem a = 0; a < n; ++a)
        for (Elem c = 0; c < n; ++c) {
            Elem b = e.add(a, c);
            if (b == kUndef) continue;
            ord.leq_[static_cast<size_t>(a) * n + b] = 1;
            ord.ominus_[static_cast<size_t>(b) * n + a] = c;  // unique by cancellativity
            if (b == e.one) ord.prime[a] = c;
        }
    return ord;
}

Poset EffectOrder::poset(const EffectAlgebra& e) const {
    Poset p;
    p.n = n;
    p.leq_ = leq_;
    p.labels.resize(n);
    for (Elem a = 0; a < n; ++a) p.labels[a] = e.label(a);
    return p;
}

LatticeStructureResult lattice_structure(const EffectAlgebra& e) {
    EffectOrder ord = derive_order(e);
    LatticeStructureResult res;
    LatticeBuildResult built = lattice_from_poset(ord.poset(e));
    if (built.lattice) {
        res.lattice = std::move(*built.lattice);
    } else {
        res.witness = built.witness;
    }
    return res;
}

MvCharacterizations mv_characterizations(const EffectAlgebra& e) {
    LatticeStructureResult ls = lattice_structure(e);
    if (!ls.lattice) {
        std::string w = ls.witness ? " witness (" + std::to_string(ls.witness->first) + "," +
                                         std::to_string(ls.witness->second) + ")"
                                   : "";
        fail(Errc::not_lattice_ordered, "mv_characterizations needs a lattice order" + w);
    }
    const BoundedLattice& l = *ls.lattice;
    EffectOrder ord = derive_order(e);
    const int n = e.n;
    MvCharacterizations mc;
    mc.a = mc.b = mc.c = mc.d = true;

    for (Elem a = 0; a < n && mc.a; ++a)
        for (Elem b = 0; b < n; ++b) {
            Elem lhs = ord.ominus(l.join(a, b), a);
            Elem rhs = ord.ominus(b, l.meet(a, b));
            check_internal(lhs != kUndef && rhs != kUndef, "difference of comparable elements undefined");
            if (lhs != rhs) {
                mc.a = false;
                mc.witness_a = {a, b};
                break;
            }
        }
    for (Elem a = 0; a < n && mc.b; ++a)
        for (Elem b = 0; b < n; ++b)
            if (l.meet(a, b) == e.zero && !ord.leq(a, ord.prime[b])) {
                mc.b = false;
                mc.witness_b = {a, b};
                break;
            }
    for (Elem a = 0; a < n && mc.c; ++a)
        for (Elem b = 0; b < n; ++b)
            if (!ord.leq(ord.ominus(a, l.meet(a, b)), ord.prime[b])) {
                mc.c = false;
                mc.witness_c = {a, b};
                break;
            }
    for (Elem a = 0; a < n && mc.d; ++a)
        for (Elem b = 0; b < n; ++b) {
            bool decomposed = false;
            for (Elem c = 0; c < n && !decomposed; ++c) {
                Elem a1 = ord.ominus(a, c);
                Elem b1 = ord.ominus(b, c);
                if (a1 == kUndef || b1 == kUndef) continue;
                Elem a1b1 = e.add(a1, b1);
                if (a1b1 != kUndef && e.defined(a1b1, c)) decomposed = true;
            }
            if (!decomposed) {
                mc.d = false;
                mc.witness_d = {a, b};
                break;
            }
        }
    return mc;
}

bool is_mv_effect(const EffectAlgebra& e) {
    if (!lattice_structure(e).lattice) return false;
    return mv_characterizations(e).all();
}

RieszResult riesz_properties(const EffectAlgebra& e) {
    EffectOrder ord = derive_order(e);
    const int n = e.n;
    RieszResult r;
    r.rdp = true;
    r.rip = true;

    for (Elem u = 0; u < n && r.rdp; ++u)
        for (Elem v1 = 0; v1 < n && r.rdp; ++v1)
            for (Elem v2 = 0; v2 < n; ++v2) {
                Elem s = e.add(v1, v2);
                if (s == kUndef || !ord.leq(u, s)) continue;
                bool split = false;
                for (Elem u1 = 0; u1 < n && !split; ++u1) {
                    if (!ord.leq(u1, v1)) continue;
                    Elem u2 = ord.ominus(u, u1);
                    if (u2 != kUndef && ord.leq(u2, v2)) split = true;
                }
                if (!split) {
                    r.rdp = false;
                    r.rdp_witness = {u, v1, v2};
                    break;
                }
            }

    for (Elem u1 = 0; u1 < n && r.rip; ++u1)
        for (Elem u2 = 0; u2 < n && r.rip; ++u2)
            for (Elem v1 = 0; v1 < n && r.rip; ++v1)
                for (Elem v2 = 0; v2 < n; ++v2) {
                    if (!(ord.leq(u1, v1) && ord.leq(u1, v2) && ord.leq(u2, v1) && ord.leq(u2, v2)))
                        continue;
                    bool interp = false;
                    for (Elem x = 0; x < n; ++x)
                        if (ord.leq(u1, x) && ord.leq(u2, x) && ord.leq(x, v1) && ord.leq(x, v2)) {
                            interp = true;
                            break;
                        }
                    if (!interp) {
                        r.rip = false;
                        r.rip_witness = {u1, u2, v1, v2};
                        break;
                    }
                }
    return r;
}

MvAlgebraReport validate_mv_algebra(const MvAlgebra& m) {
    MvAlgebraReport rep;
    const int n = m.n;
    if (n <= 0 || m.boxplus.size() != static_cast<size_t>(n) * n ||
        m.neg.size() != static_cast<size_t>(n) || m.zero < 0 || m.zero >= n) {
        rep.violations.push_back({"shape", {}, "bad table dimensions"});
        return rep;
    }
    for (Elem a = 0; a < n; ++a) {
        if (m.neg[a] < 0 || m.neg[a] >= n) {
            rep.violations.push_back({"shape", {a}, "neg out of range"});
            return rep;
        }
        for (Elem b = 0; b < n; ++b)
            if (m.bp(a, b) < 0 || m.bp(a, b) >= n) {
                rep.violations.push_back({"shape", {a, b}, "boxplus out of range"});
                return rep;
            }
    }
    const Elem top = m.neg[m.zero];
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b)
            if (m.bp(a, b) != m.bp(b, a)) {
                rep.violations.push_back({"comm", {a, b}, ""});
                goto comm_done;
            }
comm_done:;
    {
        bool found = false;
        for (Elem a = 0; a < n && !found; ++a)
            for (Elem b = 0; b < n && !found; ++b)
                for (Elem c = 0; c < n; ++c)
                    if (m.bp(m.bp(a, b), c) != m.bp(a, m.bp(b, c))) {
                        rep.violations.push_back({"assoc", {a, b, c}, ""});
                        found = true;
                        break;
                    }
    }
    for (Elem a = 0; a < n; ++a)
        if (m.bp(a, m.zero) != a) {
            rep.violations.push_back({"zero", {a}, ""});
            break;
        }
    for (Elem a = 0; a < n; ++a)
        if (m.neg[m.neg[a]] != a) {
            rep.violations.push_back({"neg-invol", {a}, ""});
            break;
        }
    for (Elem a = 0; a < n; ++a)
        if (m.bp(a, top) != top) {
            rep.violations.push_back({"absorb", {a}, ""});
            break;
        }
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b)
            if (m.bp(m.neg[m.bp(m.neg[a], b)], b) != m.bp(m.neg[m.bp(m.neg[b], a)], a)) {
                rep.violations.push_back({"lukasiewicz", {a, b}, ""});
                return rep;
            }
    return rep;
}

MvAlgebra to_mv_algebra(const EffectAlgebra& e) {
    LatticeStructureResult ls = lattice_structure(e);
    if (!ls.lattice || !mv_characterizations(e).all())
        fail(Errc::not_mv_effect, "to_mv_algebra needs an MV-effect algebra");
    const BoundedLattice& l = *ls.lattice;
    EffectOrder ord = derive_order(e);
    MvAlgebra m;
    m.n = e.n;
    m.zero = e.zero;
    m.neg = ord.prime;
    m.labels = e.labels;
    m.name = e.name;
    m.boxplus.assign(static_cast<size_t>(e.n) * e.n, kUndef);
    for (Elem a = 0; a < e.n; ++a)
        for (Elem b = 0; b < e.n; ++b) {
            Elem v = e.add(a, l.meet(ord.prime[a], b));  // defined: the meet is below a'
            check_internal(v != kUndef, "boxplus fell outside the sum table");
            m.boxplus[static_cast<size_t>(a) * e.n + b] = v;
        }
    MvAlgebraReport rep = validate_mv_algebra(m);
    if (!rep.ok())
        fail(Errc::mv_axiom_violation,
             "derived total operation fails " + rep.violations.front().axiom);
    return m;
}

EffectAlgebra from_mv_algebra(const MvAlgebra& m) {
    MvAlgebraReport rep = validate_mv_algebra(m);
    if (!rep.ok())
        fail(Errc::mv_axiom_violation, "input fails " + rep.violations.front().axiom);
    const int n = m.n;
    const Elem top = m.neg[m.zero];
    // x <= y iff y = x boxplus neg(x boxplus neg y); the natural MV order.
    auto leq = [&](Elem x, Elem y) { return m.bp(x, m.neg[m.bp(x, m.neg[y])]) == y; };
    EffectAlgebra e = EffectAlgebra::empty_table(n, m.zero, top);
    e.labels = m.labels;
    e.name = m.name;
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b)
            if (leq(a, m.neg[b])) e.sum[static_cast<size_t>(a) * n + b] = m.bp(a, b);
    ValidationReport v = validate_effect_algebra(e);
    if (!v.ok()) fail(Errc::mv_axiom_violation, "restricted sum fails " + v.summary());
    return e;
}

MorphismFlags validate_morphism(const EffectAlgebra& src, const EffectAlgebra& dst,
                                const std::vector<Elem>& map) {
    MorphismFlags f;
    if (map.size() != static_cast<size_t>(src.n)) return f;
    for (Elem a = 0; a < src.n; ++a)
        if (map[a] < 0 || map[a] >= dst.n) return f;
    f.total_ok = true;

    f.is_morphism = map[src.one] == dst.one;
    if (!f.is_morphism) f.morphism_witness = {src.one, src.one};
    for (Elem a = 0; a < src.n && f.is_morphism; ++a)
        for (Elem b = 0; b < src.n; ++b) {
            Elem ab = src.add(a, b);
            if (ab == kUndef) continue;
            Elem v = dst.add(map[a], map[b]);
            if (v == kUndef || v != map[ab]) {
                f.is_morphism = false;
                f.morphism_witness = {a, b};
                break;
            }
        }

    std::vector<char> in_image(dst.n, 0);
    for (Elem a = 0; a < src.n; ++a) in_image[map[a]] = 1;
    f.is_surjective = std::all_of(in_image.begin(), in_image.end(), [](char c) { return c != 0; });
    f.is_injective = true;
    for (Elem a = 0; a < src.n && f.is_injective; ++a)
        for (Elem b = a + 1; b < src.n; ++b)
            if (map[a] == map[b]) {
                f.is_injective = false;
                break;
            }

    // Fullness: phi(a) _|_ phi(b) with the sum in the image forces an
    // orthogonal preimage pair with the same images.
    f.is_full = true;
    for (Elem a = 0; a < src.n && f.is_full; ++a)
        for (Elem b = 0; b < src.n; ++b) {
            Elem s = dst.add(map[a], map[b]);
            if (s == kUndef || !in_image[s]) continue;
            bool lifted = false;
            for (Elem a1 = 0; a1 < src.n && !lifted; ++a1) {
                if (map[a1] != map[a]) continue;
                for (Elem b1 = 0; b1 < src.n; ++b1)
                    if (map[b1] == map[b] && src.defined(a1, b1)) {
                        lifted = true;
                        break;
                    }
            }
            if (!lifted) {
                f.is_full = false;
                f.full_witness = {a, b};
                break;
            }
        }
    return f;
}

namespace {

// Per-element profile that any isomorphism must preserve.
struct ElemProfile {
    int rank = 0;
    int defined = 0;         // defined sums in the row
    int below = 0, above = 0;
    bool self_complement = false;

    bool operator==(const ElemProfile& o) const {
        return rank == o.rank && defined == o.defined && below == o.below && above == o.above &&
               self_complement == o.self_complement;
    }
};

std::vector<ElemProfile> profiles(const EffectAlgebra& e) {
    EffectOrder ord = derive_order(e);
    std::vector<int> ranks = order_ranks(ord.poset(e));
    std::vector<ElemProfile> ps(e.n);
    for (Elem a = 0; a < e.n; ++a) {
        ps[a].rank = ranks[a];
        ps[a].self_complement = ord.prime[a] == a;
        for (Elem b = 0; b < e.n; ++b) {
            if (e.defined(a, b)) ++ps[a].defined;
            if (ord.leq(b, a)) ++ps[a].below;
            if (ord.leq(a, b)) ++ps[a].above;
        }
    }
    return ps;
}

struct IsoSearch {
    const EffectAlgebra& a;
    const EffectAlgebra& b;
    std::vector<ElemProfile> pa, pb;
    std::vector<Elem> primea, primeb;
    std::vector<Elem> map, used;          // used: image -> preimage or kUndef

    bool consistent(Elem x, Elem y) const {
        // All previously assigned pairs must agree with (x -> y) on the table.
        for (Elem u = 0; u < a.n; ++u) {
            if (map[u] == kUndef) continue;
            Elem s1 = a.add(x, u), s2 = b.add(y, map[u]);
            if ((s1 == kUndef) != (s2 == kUndef)) return false;
            if (s1 != kUndef && map[s1] != kUndef && map[s1] != s2) return false;
        }
        return true;
    }

    bool assign(Elem x, Elem y) {
        if (map[x] != kUndef) return map[x] == y;
        if (used[y] != kUndef) return false;
        if (!(pa[x] == pb[y])) return false;
        if (!consistent(x, y)) return false;
        map[x] = y;
        used[y] = x;
        return true;
    }

    void unassign_from(size_t mark, std::vector<std::pair<Elem, Elem>>& trail) {
        while (trail.size() > mark) {
            auto [x, y] = trail.back();
            trail.pop_back();
            map[x] = kUndef;
            used[y] = kUndef;
        }
    }

    std::vector<std::pair<Elem, Elem>> trail;

    bool try_assign(Elem x, Elem y) {
        size_t mark = trail.size();
        if (map[x] == kUndef) {
            if (!assign(x, y)) return false;
            trail.push_back({x, y});
            // Complements are forced.
            Elem xp = primea[x], yp = primeb[y];
            if (map[xp] == kUndef) {
                if (!assign(xp, yp)) {
                    unassign_from(mark, trail);
                    return false;
                }
                trail.push_back({xp, yp});
            } else if (map[xp] != yp) {
                unassign_from(mark, trail);
                return false;
            }
            return true;
        }
        return map[x] == y;
    }

    bool dfs(Elem x) {
        while (x < a.n && map[x] != kUndef) ++x;
        if (x >= a.n) return check_complete();
        for (Elem y = 0; y < b.n; ++y) {
            size_t mark = trail.size();
            if (try_assign(x, y)) {
                if (dfs(x + 1)) return true;
            }
            unassign_from(mark, trail);
        }
        return false;
    }

    bool check_complete() const {
        for (Elem x = 0; x < a.n; ++x)
            for (Elem y = 0; y < a.n; ++y) {
                Elem s1 = a.add(x, y), s2 = b.add(map[x], map[y]);
                if (s1 == kUndef ? s2 != kUndef : (s2 == kUndef || map[s1] != s2)) return false;
            }
        return true;
    }
};

} // namespace

std::optional<std::vector<Elem>> find_isomorphism(const EffectAlgebra& a, const EffectAlgebra& b) {
    if (a.n != b.n) return std::nullopt;
    if (!validate_effect_algebra(a).ok() || !validate_effect_algebra(b).ok())
        fail(Errc::invalid_input, "find_isomorphism needs valid effect algebras");
    IsoSearch s{a, b, profiles(a), profiles(b), derive_order(a).prime, derive_order(b).prime,
                std::vector<Elem>(a.n, kUndef), std::vector<Elem>(a.n, kUndef), {}};
    {
        // Profile multisets must match.
        auto key = [](const ElemProfile& p) {
            return std::array<int, 5>{p.rank, p.defined, p.below, p.above, p.self_complement ? 1 : 0};
        };
        std::vector<std::array<int, 5>> ka, kb;
        for (const auto& p : s.pa) ka.push_back(key(p));
        for (const auto& p : s.pb) kb.push_back(key(p));
        std::sort(ka.begin(), ka.end());
        std::sort(kb.begin(), kb.end());
        if (ka != kb) return std::nullopt;
    }
    if (!s.try_assign(a.zero, b.zero)) return std::nullopt;
    if (!s.try_assign(a.one, b.one)) return std::nullopt;
    if (!s.dfs(0)) return std::nullopt;
    return s.map;
}

} // namespace mvrep
