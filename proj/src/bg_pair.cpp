#include "mvrep/bg_pair.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>

namespace mvrep {

// ---------------------------------------------------------------------------
// Permutations and groups
// ---------------------------------------------------------------------------

Perm Perm::id(int n) {
    Perm p;
    p.img.resize(n);
    std::iota(p.img.begin(), p.img.end(), 0);
    return p;
}

Perm Perm::compose(const Perm& then) const {
    check_internal(degree() == then.degree(), "composing permutations of unequal degree");
    Perm r;
    r.img.resize(img.size());
    for (int i = 0; i < degree(); ++i) r.img[i] = then.img[img[i]];
    return r;
}

Perm Perm::inverse() const {
    Perm r;
    r.img.resize(img.size());
    for (int i = 0; i < degree(); ++i) r.img[img[i]] = i;
    return r;
}

Mask Perm::apply(Mask x) const {
    Mask y = 0;
    for (int i = 0; i < degree(); ++i)
        if (x & (Mask(1) << i)) y |= Mask(1) << img[i];
    return y;
}

bool Group::contains(const Perm& p) const { return index_of(p) >= 0; }

int Group::index_of(const Perm& p) const {
    auto it = std::lower_bound(perms.begin(), perms.end(), p);
    if (it == perms.end() || !(*it == p)) return -1;
    return static_cast<int>(it - perms.begin());
}

static void require_perm(const Perm& p, int atoms) {
    if (p.degree() != atoms) fail(Errc::invalid_input, "permutation degree does not match the atom count");
    std::vector<char> seen(atoms, 0);
    for (int v : p.img) {
        if (v < 0 || v >= atoms || seen[v]) fail(Errc::invalid_input, "not a permutation of the atoms");
        seen[v] = 1;
    }
}

Group full_aut(int atoms, int cap) {
    if (atoms < 0) fail(Errc::invalid_input, "negative atom count");
    if (atoms > cap)
        fail(Errc::cap_exceeded, "full automorphism group on " + std::to_string(atoms) +
                                     " atoms exceeds the cap of " + std::to_string(cap));
    Group g;
    g.atoms = atoms;
    std::vector<int> v(atoms);
    std::iota(v.begin(), v.end(), 0);
    // next_permutation from the identity emits ascending lexicographic order,
    // so perms[0] is the identity.
    do {
        g.perms.push_back(Perm{v});
    } while (std::next_permutation(v.begin(), v.end()));
    return g;
}

Group subgroup_closure(int atoms, const std::vector<Perm>& generators) {
    for (const Perm& p : generators) require_perm(p, atoms);
    std::set<Perm> seen;
    std::queue<Perm> work;
    Perm e = Perm::id(atoms);
    seen.insert(e);
    work.push(e);
    // A finite set containing the identity and closed under products of the
    // generators is a subgroup (powers of each element reach its inverse).
    while (!work.empty()) {
        Perm g = work.front();
        work.pop();
        for (const Perm& s : generators) {
            Perm gs = g.compose(s);
            if (seen.insert(gs).second) work.push(gs);
        }
    }
    Group g;
    g.atoms = atoms;
    g.perms.assign(seen.begin(), seen.end());
    for (const Perm& p : g.perms)
        check_internal(g.contains(p.inverse()), "closure is not inverse-closed");
    return g;
}

std::vector<Group> all_subgroups(int atoms) {
    if (atoms > 5)
        fail(Errc::cap_exceeded, "subgroup enumeration on " + std::to_string(atoms) + " atoms");
    Group full = full_aut(atoms, 5);
    std::set<std::vector<Perm>> seen;
    std::queue<Group> work;
    Group trivial;
    trivial.atoms = atoms;
    trivial.perms.push_back(Perm::id(atoms));
    seen.insert(trivial.perms);
    work.push(trivial);
    std::vector<Group> out;
    while (!work.empty()) {
        Group g = work.front();
        work.pop();
        out.push_back(g);
        for (const Perm& p : full.perms) {
            if (g.contains(p)) continue;
            std::vector<Perm> gens = g.perms;
            gens.push_back(p);
            Group h = subgroup_closure(atoms, gens);
            if (seen.insert(h.perms).second) work.push(h);
        }
    }
    std::sort(out.begin(), out.end(), [](const Group& a, const Group& b) {
        if (a.order() != b.order()) return a.order() < b.order();
        return a.perms < b.perms;
    });
    return out;
}

// ---------------------------------------------------------------------------
// Pairs (B, G)
// ---------------------------------------------------------------------------

static void require_pair(const BGPair& p) {
    if (p.group.atoms != p.alg.atoms)
        fail(Errc::invalid_input, "group and Boolean algebra act on different atom sets");
    if (p.group.perms.empty() || !(p.group.perms[0] == Perm::id(p.alg.atoms)))
        fail(Errc::invalid_input, "group must be sorted and contain the identity");
    for (const Perm& q : p.group.perms) require_perm(q, p.alg.atoms);
}

std::vector<std::vector<Mask>> BGPair::image_tables() const {
    const int n = alg.size();
    std::vector<std::vector<Mask>> tbl(group.order());
    for (size_t i = 0; i < group.order(); ++i) {
        tbl[i].resize(n);
        for (int x = 0; x < n; ++x) tbl[i][x] = group.perms[i].apply(Mask(x));
    }
    return tbl;
}

Partition orbit_partition(const BGPair& p) {
    require_pair(p);
    auto tbl = p.image_tables();
    const int n = p.alg.size();
    std::vector<int> assign(n);
    for (int x = 0; x < n; ++x) {
        Mask least = tbl[0][x];
        for (const auto& t : tbl) least = std::min(least, t[x]);
        assign[x] = static_cast<int>(least);
    }
    return make_partition(assign);
}

static bool contains_mask(const std::vector<Mask>& xs, Mask x) {
    return std::binary_search(xs.begin(), xs.end(), x);
}

static std::vector<Mask> maximal_in(const std::vector<Mask>& xs) {
    std::vector<Mask> out;
    for (Mask x : xs) {
        bool maximal = true;
        for (Mask y : xs)
            if (x != y && subset(x, y)) {
                maximal = false;
                break;
            }
        if (maximal) out.push_back(x);
    }
    return out;
}

LowerSets lower_sets(const BGPair& p, Mask a, Mask b) {
    require_pair(p);
    if (a > p.alg.full() || b > p.alg.full()) fail(Errc::invalid_input, "mask outside the algebra");
    std::set<Mask> oa, ob;
    for (const Perm& f : p.group.perms) {
        oa.insert(f.apply(a));
        ob.insert(f.apply(b));
    }
    std::set<Mask> low, lowp;
    for (Mask y : ob) low.insert(a & y);
    for (Mask x : oa)
        for (Mask y : ob) lowp.insert(x & y);
    LowerSets r;
    r.L.assign(low.begin(), low.end());
    r.Lplus.assign(lowp.begin(), lowp.end());
    r.maxL = maximal_in(r.L);
    r.maxLplus = maximal_in(r.Lplus);
    return r;
}

// ---------------------------------------------------------------------------
// The two pair conditions
// ---------------------------------------------------------------------------

Mvp1Result check_mvp1(const BGPair& p) {
    require_pair(p);
    auto tbl = p.image_tables();
    const Mask end = Mask(p.alg.size());
    const size_t ord = p.group.order();
    Mvp1Result r;

    // Defining form: a <= b and f(a) <= b force some h with h(a) = f(a),
    // h(b) = b.  Witnesses scan a, then b, then f in sorted group order.
    r.holds = true;
    for (Mask a = 0; a < end && r.holds; ++a)
        for (Mask b = 0; b < end && r.holds; ++b) {
            if (!subset(a, b)) continue;
            for (size_t fi = 0; fi < ord; ++fi) {
                Mask fa = tbl[fi][a];
                if (!subset(fa, b)) continue;
                bool found = false;
                for (size_t hi = 0; hi < ord && !found; ++hi)
                    found = tbl[hi][a] == fa && tbl[hi][b] == b;
                if (!found) {
                    r.holds = false;
                    r.witness_a = a;
                    r.witness_b = b;
                    r.witness_f = p.group.perms[fi];
                    break;
                }
            }
        }

    // Equivalent form: a <= b and a <= f(b) force some h with h(b) = f(b),
    // h(a) = a.
    r.form_b = true;
    for (Mask a = 0; a < end && r.form_b; ++a)
        for (Mask b = 0; b < end && r.form_b; ++b) {
            if (!subset(a, b)) continue;
            for (size_t fi = 0; fi < ord; ++fi) {
                Mask fb = tbl[fi][b];
                if (!subset(a, fb)) continue;
                bool found = false;
                for (size_t hi = 0; hi < ord && !found; ++hi)
                    found = tbl[hi][b] == fb && tbl[hi][a] == a;
                if (!found) {
                    r.form_b = false;
                    break;
                }
            }
        }

    // Equivalent form through complements: a ^ b = 0 and a ^ f(b) = 0 force
    // some h with h(b) = f(b), h(a) = a.
    r.form_c = true;
    for (Mask a = 0; a < end && r.form_c; ++a)
        for (Mask b = 0; b < end && r.form_c; ++b) {
            if (a & b) continue;
            for (size_t fi = 0; fi < ord; ++fi) {
                Mask fb = tbl[fi][b];
                if (a & fb) continue;
                bool found = false;
                for (size_t hi = 0; hi < ord && !found; ++hi)
                    found = tbl[hi][b] == fb && tbl[hi][a] == a;
                if (!found) {
                    r.form_c = false;
                    break;
                }
            }
        }

    check_internal(r.holds == r.form_b && r.holds == r.form_c,
                   "the three forms of the first pair condition disagree");
    return r;
}

Mvp2Result check_mvp2(const BGPair& p) {
    require_pair(p);
    const Mask end = Mask(p.alg.size());
    Mvp2Result r;
    for (Mask a = 0; a < end; ++a)
        for (Mask b = 0; b < end; ++b) {
            LowerSets low = lower_sets(p, a, b);
            for (Mask x : low.L) {
                bool dominated = false;
                for (Mask m : low.maxL)
                    if (subset(x, m)) {
                        dominated = true;
                        break;
                    }
                if (!dominated) {
                    r.holds = false;
                    r.witness = {a, b, x};
                    return r;
                }
            }
        }
    r.holds = true;
    return r;
}

MvPairVerdict mv_pair_verdict(const BGPair& p) {
    MvPairVerdict v;
    v.mvp1 = check_mvp1(p);
    v.mvp2 = check_mvp2(p);
    return v;
}

bool max_transport_check(const BGPair& p) {
    if (!mv_pair_verdict(p).is_mv_pair())
        fail(Errc::not_mv_pair, "max transport is only claimed for pairs satisfying both conditions");
    auto tbl = p.image_tables();
    const Mask end = Mask(p.alg.size());
    for (Mask a = 0; a < end; ++a)
        for (Mask b = 0; b < end; ++b) {
            LowerSets low = lower_sets(p, a, b);
            // The identity image covers max L(a,b) <= max L+(a,b).
            for (Mask m : low.maxL)
                for (size_t fi = 0; fi < p.group.order(); ++fi)
                    if (!contains_mask(low.maxLplus, tbl[fi][m])) return false;
        }
    return true;
}

// ---------------------------------------------------------------------------
// Quotient of an MV-pair
// ---------------------------------------------------------------------------

QuotientMvResult build_quotient_mv(const BGPair& p) {
    require_pair(p);
    MvPairVerdict pv = mv_pair_verdict(p);
    if (!pv.is_mv_pair()) {
        std::string which = pv.mvp1.holds ? "second" : "first";
        fail(Errc::not_mv_pair, "the " + which + " pair condition fails, quotient not attempted");
    }

    EffectAlgebra b_ea = boolean_effect_algebra(p.alg);
    b_ea.name = p.name.empty() ? "pair" : p.name;
    Partition orbits = orbit_partition(p);
    CongruenceVerdict cv = check_congruence(b_ea, orbits);
    if (!cv.is_congruence())
        fail(Errc::not_a_congruence, "orbit partition of " + b_ea.name + " is not a congruence");

    QuotientMvResult r;
    r.orbits = orbits;
    r.quotient = quotient(b_ea, orbits);

    LatticeStructureResult ls = lattice_structure(r.quotient.algebra);
    if (!ls.lattice)
        fail(Errc::not_lattice_ordered,
             "quotient of " + b_ea.name + " is not lattice-ordered at (" +
                 std::to_string(ls.witness->first) + "," + std::to_string(ls.witness->second) + ")");
    r.lattice = *ls.lattice;

    RieszResult rz = riesz_properties(r.quotient.algebra);
    if (!rz.rdp) fail(Errc::not_mv_effect, "quotient lost the decomposition property");
    MvCharacterizations mc = mv_characterizations(r.quotient.algebra);
    if (!mc.all()) fail(Errc::not_mv_effect, "quotient fails one of the four MV conditions");

    // Meet identity: the class [a] ^ [b], as a set of elements, is exactly
    // the set of maximal elements of L+(a,b); every member of L+(a,b) lies
    // below the meet class, and each maximal member of L(a,b) represents it.
    const Mask end = Mask(p.alg.size());
    for (Mask a = 0; a < end; ++a)
        for (Mask b = 0; b < end; ++b) {
            LowerSets low = lower_sets(p, a, b);
            int mblk = r.lattice.meet(orbits.block_of[a], orbits.block_of[b]);
            std::vector<Elem> maxlp(low.maxLplus.begin(), low.maxLplus.end());
            check_internal(orbits.blocks[mblk] == maxlp,
                           "meet class differs from the maximal elements of L+ at (" +
                               std::to_string(a) + "," + std::to_string(b) + ")");
            for (Mask x : low.Lplus)
                check_internal(r.lattice.leq(orbits.block_of[x], mblk),
                               "member of L+ above the meet class");
            for (Mask m : low.maxL)
                check_internal(orbits.block_of[m] == mblk,
                               "maximal element of L not representing the meet class");
        }
    return r;
}

// ---------------------------------------------------------------------------
// The phi-preserving group of a generated Boolean algebra
// ---------------------------------------------------------------------------

Group phi_preserving_group(const RGen& r, int cap) {
    const int atoms = r.atom_count();
    Group all = full_aut(atoms, cap);
    Group g;
    g.atoms = atoms;
    const Mask fullm = r.bool_alg.full();
    for (const Perm& p : all.perms) {
        bool ok = true;
        for (Mask x = 0; ok && x <= fullm; ++x) ok = r.phi(p.apply(x)) == r.phi(x);
        if (ok) g.perms.push_back(p);
    }
    check_internal(!g.perms.empty() && g.perms[0] == Perm::id(atoms),
                   "identity does not preserve phi");
    // Stabiliser-style condition, so closure is automatic; verified outright
    // while the order keeps the quadratic scan cheap.
    if (g.order() <= 2000) {
        for (const Perm& x : g.perms) {
            check_internal(g.contains(x.inverse()), "phi-preserving set not inverse-closed");
            for (const Perm& y : g.perms)
                check_internal(g.contains(x.compose(y)), "phi-preserving set not product-closed");
        }
    }
    return g;
}

Perm phi_swap(const RGen& r, Mask u, Mask v) {
    const Mask fullm = r.bool_alg.full();
    if (u > fullm || v > fullm) fail(Errc::invalid_input, "mask outside the algebra");
    if (r.phi(u) != r.phi(v))
        fail(Errc::phi_mismatch, "swap needs phi(u) = phi(v), got " + r.m.label(r.phi(u)) +
                                     " and " + r.m.label(r.phi(v)));

    const int atoms = r.atom_count();
    Perm f = Perm::id(atoms);
    if (u != v) {
        // Split off the common part; phi agrees on the disjoint remainders by
        // cancellativity, so they carry a phi-preserving interval isomorphism.
        Mask common = u & v, u0 = u & ~common, v0 = v & ~common;
        IntervalIso psi = between_iso(r, u0, v0);
        IntervalIso inv = psi.inverse();
        for (int i = 0; i < atoms; ++i) {
            if (u0 & (Mask(1) << i)) f.img[i] = psi.atom_map[i];
            else if (v0 & (Mask(1) << i)) f.img[i] = inv.atom_map[i];
        }
    }

    require_perm(f, atoms);
    for (int i = 0; i < atoms; ++i)
        check_internal(f.img[f.img[i]] == i, "swap is not an involution");
    check_internal(f.apply(u) == v && f.apply(v) == u, "swap does not exchange u and v");
    for (Mask x = 0; x <= fullm; ++x)
        check_internal(r.phi(f.apply(x)) == r.phi(x), "swap does not preserve phi");
    return f;
}

bool kernel_equality_check(const RGen& r, int cap) {
    Group g = phi_preserving_group(r, cap);
    BGPair pair{r.bool_alg, g, "kernel"};
    Partition orbits = orbit_partition(pair);

    const Mask fullm = r.bool_alg.full();
    std::vector<int> fib(static_cast<size_t>(fullm) + 1);
    for (Mask x = 0; x <= fullm; ++x) fib[x] = r.phi(x);
    Partition fibres = make_partition(fib);

    // Both partitions are normalised by least member, so block assignments
    // are directly comparable.
    if (orbits.block_of != fibres.block_of) return false;
    for (Mask x = 0; x <= fullm; ++x)
        if (!orbits.same(x, Elem(r.embed[r.phi(x)]))) return false;
    return true;
}

// ---------------------------------------------------------------------------
// The representation round trip
// ---------------------------------------------------------------------------

RepresentationResult verify_representation(const EffectAlgebra& m, int max_atoms) {
    RepresentationResult res;
    res.rgen = rgenerate(m, max_atoms);
    res.group = phi_preserving_group(res.rgen, max_atoms);

    BGPair pair{res.rgen.bool_alg, res.group,
                "B(" + (m.name.empty() ? std::string("m") : m.name) + ")"};
    res.pair_verdict = mv_pair_verdict(pair);
    res.quotient = build_quotient_mv(pair);

    // The induced map [a] |-> phi(a), checked well-defined on every class.
    const int k = res.quotient.quotient.algebra.n;
    res.iso_map.assign(k, kUndef);
    bool well_defined = true;
    for (int blk = 0; blk < k; ++blk) {
        Elem val = res.rgen.phi(Mask(res.quotient.orbits.blocks[blk][0]));
        for (Elem x : res.quotient.orbits.blocks[blk])
            well_defined = well_defined && res.rgen.phi(Mask(x)) == val;
        res.iso_map[blk] = val;
    }
    res.iso_flags = validate_morphism(res.quotient.quotient.algebra, m, res.iso_map);
    res.ok = res.pair_verdict.is_mv_pair() && well_defined && res.iso_flags.is_isomorphism();
    return res;
}

} // namespace mvrep
