#include "mvrep/congruence.hpp"

#include <algorithm>
#include <map>

namespace mvrep {

Partition make_partition(const std::vector<int>& assignment) {
    const int n = static_cast<int>(assignment.size());
    Partition p;
    p.block_of.assign(n, -1);
    std::map<int, int> renumber;          // old id -> dense id in least-member order
    for (Elem x = 0; x < n; ++x) {
        auto it = renumber.find(assignment[x]);
        if (it == renumber.end()) {
            int id = static_cast<int>(p.blocks.size());
            renumber.emplace(assignment[x], id);
            p.blocks.push_back({});
            p.block_of[x] = id;
            p.blocks[id].push_back(x);
        } else {
            p.block_of[x] = it->second;
            p.blocks[it->second].push_back(x);
        }
    }
    return p;
}

Partition identity_partition(int n) {
    std::vector<int> a(n);
    for (int i = 0; i < n; ++i) a[i] = i;
    return make_partition(a);
}

Partition single_block(int n) { return make_partition(std::vector<int>(n, 0)); }

CongruenceVerdict check_congruence(const EffectAlgebra& e, const Partition& p) {
    CongruenceVerdict v;
    const int n = e.n;

    v.c1 = static_cast<int>(p.block_of.size()) == n && !p.blocks.empty();
    if (v.c1) {
        std::vector<int> seen(p.blocks.size(), 0);
        for (Elem x = 0; x < n; ++x) {
            int b = p.block_of[x];
            if (b < 0 || b >= p.size()) { v.c1 = false; break; }
            ++seen[b];
        }
        if (v.c1) {
            size_t total = 0;
            for (int b = 0; b < p.size(); ++b) {
                total += p.blocks[b].size();
                for (Elem x : p.blocks[b])
                    if (p.block_of[x] != b) v.c1 = false;
            }
            if (total != static_cast<size_t>(n)) v.c1 = false;
        }
    }
    if (!v.c1) return v;

    v.c2 = true;
    for (Elem a1 = 0; a1 < n && v.c2; ++a1)
        for (Elem a2 = 0; a2 < n && v.c2; ++a2) {
            if (!p.same(a1, a2)) continue;
            for (Elem b1 = 0; b1 < n && v.c2; ++b1) {
                Elem s1 = e.add(a1, b1);
                if (s1 == kUndef) continue;
                for (Elem b2 = 0; b2 < n; ++b2) {
                    if (!p.same(b1, b2)) continue;
                    Elem s2 = e.add(a2, b2);
                    if (s2 != kUndef && !p.same(s1, s2)) {
                        v.c2 = false;
                        v.c2_witness = {a1, a2, b1, b2};
                        break;
                    }
                }
            }
        }

    v.c5 = true;
    for (Elem a = 0; a < n && v.c5; ++a)
        for (Elem b = 0; b < n && v.c5; ++b)
            for (Elem c = 0; c < n; ++c) {
                Elem bc = e.add(b, c);
                if (bc == kUndef || !p.same(a, bc)) continue;
                bool lift = false;
                for (Elem b1 : p.blocks[p.block_of[b]]) {
                    for (Elem c1 : p.blocks[p.block_of[c]])
                        if (e.add(b1, c1) == a) {
                            lift = true;
                            break;
                        }
                    if (lift) break;
                }
                if (!lift) {
                    v.c5 = false;
                    v.c5_witness = {a, b, c};
                    break;
                }
            }

    v.c6 = true;
    EffectOrder ord = derive_order(e);
    for (Elem x = 0; x < n && v.c6; ++x)
        for (Elem y = 0; y < n; ++y) {
            if (!p.same(x, y)) continue;
            if (!p.same(ord.prime[x], ord.prime[y])) {
                v.c6 = false;
                v.c6_witness = {x, y};
                break;
            }
        }
    return v;
}

QuotientResult quotient(const EffectAlgebra& e, const Partition& p) {
    CongruenceVerdict v = check_congruence(e, p);
    if (!v.is_congruence()) fail(Errc::not_a_congruence, "quotient needs a congruence");

    const int nq = p.size();
    QuotientResult res;
    res.algebra = EffectAlgebra::empty_table(nq, p.block_of[e.zero], p.block_of[e.one]);
    res.algebra.name = e.name.empty() ? "quotient" : e.name + "/~";
    res.algebra.labels.resize(nq);
    for (int b = 0; b < nq; ++b) res.algebra.labels[b] = "[" + e.label(p.blocks[b][0]) + "]";

    for (int ba = 0; ba < nq; ++ba)
        for (int bb = ba; bb < nq; ++bb) {
            Elem value = kUndef;
            Elem wa = kUndef, wb = kUndef;
            for (Elem a : p.blocks[ba])
                for (Elem b : p.blocks[bb]) {
                    Elem s = e.add(a, b);
                    if (s == kUndef) continue;
                    if (value == kUndef) {
                        value = p.block_of[s];
                        wa = a;
                        wb = b;
                    } else if (p.block_of[s] != value) {
                        fail(Errc::ill_defined_sum,
                             "[" + std::to_string(ba) + "]+[" + std::to_string(bb) +
                                 "] disagrees between representatives (" + std::to_string(wa) + "," +
                                 std::to_string(wb) + ") and (" + std::to_string(a) + "," +
                                 std::to_string(b) + ")");
                    }
                }
            if (value != kUndef) res.algebra.set_sum(ba, bb, value);
        }

    ValidationReport rep = validate_effect_algebra(res.algebra);
    if (!rep.ok()) fail(Errc::ill_defined_sum, "quotient table is not an effect algebra: " + rep.summary());

    res.canonical_map = p.block_of;
    std::vector<Elem> cm(res.canonical_map.begin(), res.canonical_map.end());
    res.canonical_flags = validate_morphism(e, res.algebra, cm);
    check_internal(res.canonical_flags.is_morphism && res.canonical_flags.is_surjective &&
                       res.canonical_flags.is_full,
                   "canonical quotient map is not a full surjective morphism");
    return res;
}

QuotientOrderEquivalence congruence_order_lemma(const EffectAlgebra& e, const Partition& p,
                                                Elem x, Elem y) {
    QuotientOrderEquivalence q;
    QuotientResult quot = quotient(e, p);
    EffectOrder qord = derive_order(quot.algebra);
    q.class_leq = qord.leq(p.block_of[x], p.block_of[y]);

    EffectOrder ord = derive_order(e);
    for (Elem x1 : p.blocks[p.block_of[x]])
        if (ord.leq(x1, y)) {
            q.lift_left = true;
            break;
        }
    for (Elem y1 : p.blocks[p.block_of[y]])
        if (ord.leq(x, y1)) {
            q.lift_right = true;
            break;
        }
    return q;
}

} // namespace mvrep
