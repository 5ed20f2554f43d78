#include "mvrep/catalog.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

namespace mvrep {

// ---------------------------------------------------------------------------
// Standard instances
// ---------------------------------------------------------------------------

EffectAlgebra luka_chain(int n) {
    if (n < 2) fail(Errc::invalid_input, "a chain needs at least two elements");
    EffectAlgebra e = EffectAlgebra::empty_table(n, 0, n - 1);
    const int m = n - 1;
    for (Elem a = 0; a < n; ++a)
        for (Elem b = a; b < n; ++b)
            if (a + b <= m) e.set_sum(a, b, a + b);
    e.labels.resize(n);
    for (Elem k = 0; k < n; ++k) {
        if (k == 0) e.labels[k] = "0";
        else if (k == m) e.labels[k] = "1";
        else e.labels[k] = std::to_string(k) + "/" + std::to_string(m);
    }
    e.name = "luka" + std::to_string(n);
    return e;
}

EffectAlgebra boolean_algebra_ea(int atoms) {
    BooleanAlg b = BooleanAlg::with_atoms(atoms);
    EffectAlgebra e = boolean_effect_algebra(b);
    e.name = "boolean" + std::to_string(atoms);
    return e;
}

EffectAlgebra product_ea(const EffectAlgebra& a, const EffectAlgebra& b) {
    EffectAlgebra e = EffectAlgebra::empty_table(a.n * b.n, a.zero * b.n + b.zero,
                                                 a.one * b.n + b.one);
    e.labels.resize(e.n);
    for (Elem i = 0; i < a.n; ++i)
        for (Elem j = 0; j < b.n; ++j)
            e.labels[i * b.n + j] = "(" + a.label(i) + "," + b.label(j) + ")";
    for (Elem i1 = 0; i1 < a.n; ++i1)
        for (Elem j1 = 0; j1 < b.n; ++j1)
            for (Elem i2 = 0; i2 < a.n; ++i2)
                for (Elem j2 = 0; j2 < b.n; ++j2) {
                    Elem si = a.add(i1, i2), sj = b.add(j1, j2);
                    if (si != kUndef && sj != kUndef)
                        e.set_sum(i1 * b.n + j1, i2 * b.n + j2, si * b.n + sj);
                }
    e.name = a.name + "x" + b.name;
    check_internal(validate_effect_algebra(e).ok(), "product table invalid");
    return e;
}

EffectAlgebra mo2() {
    // Two four-element Boolean blocks glued at 0 and 1: the standard
    // lattice-ordered algebra that is not MV.
    EffectAlgebra e = EffectAlgebra::empty_table(6, 0, 5);
    e.labels = {"0", "a", "a'", "b", "b'", "1"};
    for (Elem x = 0; x < 6; ++x) e.set_sum(0, x, x);
    e.set_sum(1, 2, 5);
    e.set_sum(3, 4, 5);
    e.name = "mo2";
    check_internal(validate_effect_algebra(e).ok(), "mo2 table invalid");
    return e;
}

// Six elements whose order is not a lattice: a and b are incomparable with
// two maximal common lower bounds c, d.
static EffectAlgebra nonlattice6() {
    EffectAlgebra e = EffectAlgebra::empty_table(6, 0, 5);
    e.labels = {"0", "c", "d", "a", "b", "1"};
    for (Elem x = 0; x < 6; ++x) e.set_sum(0, x, x);
    e.set_sum(1, 1, 4);
    e.set_sum(1, 2, 3);
    e.set_sum(2, 2, 4);
    e.set_sum(1, 3, 5);
    e.set_sum(2, 4, 5);
    e.name = "nonlattice6";
    check_internal(validate_effect_algebra(e).ok(), "nonlattice6 table invalid");
    return e;
}

static Poset diamond_m3() {
    Poset p = Poset::discrete(5);
    p.labels = {"0", "x", "y", "z", "1"};
    for (Elem m = 1; m <= 3; ++m) {
        p.set_leq(0, m);
        p.set_leq(m, 4);
    }
    p.set_leq(0, 4);
    p.close();
    return p;
}

static Poset pentagon_n5() {
    Poset p = Poset::discrete(5);
    p.labels = {"0", "a", "b", "c", "1"};
    p.set_leq(0, 1);
    p.set_leq(1, 2);
    p.set_leq(2, 4);
    p.set_leq(0, 3);
    p.set_leq(3, 4);
    p.close();
    return p;
}

// ---------------------------------------------------------------------------
// Enumeration of sum tables
// ---------------------------------------------------------------------------

namespace {

constexpr Elem kUnknown = -2;  // cell not yet decided during the search

// Backtracking over symmetric sum tables with zero = 0 and one = n-1 pinned.
// Free cells are the pairs 1 <= a <= b <= n-2; the zero row is forced and
// x (+) 1 is only defined for x = 0.  Pruning: values repeat in no row, a
// defined sum never equals either summand and is never 0, every middle row
// must still be able to reach exactly one complement, and every fully decided
// associativity instance must hold.
struct TableSearch {
    int n = 0;
    std::vector<Elem> tab;                 // n*n with kUnknown on free cells
    std::vector<std::pair<Elem, Elem>> cells;
    std::vector<Mask> used;                // row -> set of defined values
    std::vector<char> comp_has;            // row already has its complement
    std::vector<int> rem;                  // undecided cells per row
    std::set<std::vector<int>> seen;       // canonical keys
    std::vector<EffectAlgebra> found;
    int sample_limit = 0;                  // 0 = exhaustive
    long nodes = 0, node_budget = 0;       // budget only bounds sampled runs
    std::mt19937_64 rng;
    bool sampled = false;

    explicit TableSearch(int size) : n(size) {
        tab.assign(static_cast<size_t>(n) * n, kUnknown);
        for (Elem x = 0; x < n; ++x) {
            at(0, x) = at(x, 0) = x;
            if (x > 0) at(x, n - 1) = at(n - 1, x) = kUndef;
        }
        used.assign(n, 0);
        comp_has.assign(n, 0);
        rem.assign(n, 0);
        for (Elem x = 0; x < n; ++x) used[x] |= Mask(1) << x;  // x (+) 0 = x
        used[0] |= Mask(1) << (n - 1);
        comp_has[0] = comp_has[n - 1] = 1;
        for (Elem a = 1; a <= n - 2; ++a)
            for (Elem b = a; b <= n - 2; ++b) {
                cells.emplace_back(a, b);
                rem[a]++;
                if (b != a) rem[b]++;
            }
    }

    Elem& at(Elem a, Elem b) { return tab[static_cast<size_t>(a) * n + b]; }
    Elem get(Elem a, Elem b) const { return tab[static_cast<size_t>(a) * n + b]; }

    // A violated associativity instance among fully decided cells; unknown
    // cells postpone judgement until they are set.
    bool assoc_conflict() const {
        for (Elem x = 0; x < n; ++x)
            for (Elem y = 0; y < n; ++y)
                for (Elem z = 0; z < n; ++z) {
                    Elem s = get(y, z);
                    if (s < 0) continue;
                    Elem u = get(x, s);
                    if (u < 0) continue;
                    Elem t = get(x, y);
                    if (t == kUnknown) continue;
                    if (t == kUndef) return true;
                    Elem w = get(t, z);
                    if (w == kUnknown) continue;
                    if (w != u) return true;
                }
        return false;
    }

    bool done() const {
        return sample_limit > 0 && static_cast<int>(found.size()) >= sample_limit;
    }

    void leaf() {
        EffectAlgebra e = EffectAlgebra::empty_table(n, 0, n - 1);
        e.sum = tab;
        check_internal(validate_effect_algebra(e).ok(), "enumerated table fails validation");
        std::vector<int> key = canonical_key();
        if (!seen.insert(key).second) return;
        EffectAlgebra rep = EffectAlgebra::empty_table(n, 0, n - 1);
        for (size_t i = 0; i < key.size(); ++i) rep.sum[i] = key[i] == n ? kUndef : key[i];
        check_internal(validate_effect_algebra(rep).ok(), "canonical table fails validation");
        found.push_back(rep);
    }

    // Least relabelled table over the permutations fixing 0 and n-1; kUndef
    // encodes as n so that any defined value sorts first.
    std::vector<int> canonical_key() const {
        std::vector<int> mid(n - 2);
        std::iota(mid.begin(), mid.end(), 1);
        std::vector<int> q(n), best;
        q[0] = 0;
        q[n - 1] = n - 1;
        do {
            for (size_t i = 0; i < mid.size(); ++i) q[i + 1] = mid[i];
            std::vector<int> key(static_cast<size_t>(n) * n);
            for (Elem a = 0; a < n; ++a)
                for (Elem b = 0; b < n; ++b) {
                    Elem v = get(a, b);
                    key[static_cast<size_t>(q[a]) * n + q[b]] = v == kUndef ? n : q[v];
                }
            if (best.empty() || key < best) best = key;
        } while (std::next_permutation(mid.begin(), mid.end()));
        return best;
    }

    void dfs(size_t ci) {
        if (done() || (node_budget > 0 && nodes > node_budget)) return;
        ++nodes;
        if (ci == cells.size()) {
            leaf();
            return;
        }
        auto [a, b] = cells[ci];
        std::vector<Elem> options;
        options.push_back(kUndef);
        for (Elem v = 1; v <= n - 1; ++v) {
            if (v == a || v == b) continue;           // a (+) b = a forces b = 0
            if (used[a] & (Mask(1) << v)) continue;   // values repeat in no row
            if (b != a && (used[b] & (Mask(1) << v))) continue;
            options.push_back(v);
        }
        if (sampled) std::shuffle(options.begin(), options.end(), rng);

        for (Elem v : options) {
            rem[a]--;
            if (b != a) rem[b]--;
            bool feasible = true;
            if (v != kUndef) {
                at(a, b) = at(b, a) = v;
                used[a] |= Mask(1) << v;
                if (b != a) used[b] |= Mask(1) << v;
                if (v == n - 1) comp_has[a] = comp_has[b] = 1;
            } else {
                at(a, b) = at(b, a) = kUndef;
            }
            // Every middle row still needs a complement somewhere.
            if (!comp_has[a] && rem[a] == 0) feasible = false;
            if (feasible && !comp_has[b] && rem[b] == 0) feasible = false;
            if (feasible && !assoc_conflict()) dfs(ci + 1);

            if (v != kUndef) {
                used[a] &= ~(Mask(1) << v);
                if (b != a) used[b] &= ~(Mask(1) << v);
                if (v == n - 1) comp_has[a] = comp_has[b] = 0;
            }
            at(a, b) = at(b, a) = kUnknown;
            rem[a]++;
            if (b != a) rem[b]++;
            if (done()) return;
        }
    }
};

} // namespace

std::vector<EffectAlgebra> enumerate_effect_algebras(int max_n, std::uint64_t seed,
                                                     int sample_limit) {
    if (max_n > 12) fail(Errc::cap_exceeded, "table enumeration beyond 12 elements");
    std::vector<EffectAlgebra> out;
    for (int n = 2; n <= max_n; ++n) {
        TableSearch s(n);
        if (n > 6) {
            s.sampled = true;
            s.sample_limit = sample_limit;
            s.node_budget = 4000000;
            s.rng.seed(seed + static_cast<std::uint64_t>(n));
        }
        s.dfs(0);
        std::vector<EffectAlgebra> batch = std::move(s.found);
        std::sort(batch.begin(), batch.end(),
                  [](const EffectAlgebra& x, const EffectAlgebra& y) { return x.sum < y.sum; });
        for (size_t i = 0; i < batch.size(); ++i) {
            batch[i].name = "ea" + std::to_string(n) + "-" + std::to_string(i);
            out.push_back(std::move(batch[i]));
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Enumeration of pairs up to conjugacy
// ---------------------------------------------------------------------------

static std::vector<Perm> conjugated_sorted(const Group& g, const Perm& s) {
    Perm si = s.inverse();
    std::vector<Perm> out;
    out.reserve(g.order());
    for (const Perm& h : g.perms) out.push_back(si.compose(h).compose(s));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<BGPair> enumerate_bg_pairs(int max_atoms) {
    std::vector<BGPair> out;
    for (int atoms = 1; atoms <= max_atoms; ++atoms) {
        Group full = full_aut(atoms, 5);
        std::set<std::vector<Perm>> seen;
        std::vector<Group> reps;
        for (const Group& h : all_subgroups(atoms)) {
            std::vector<Perm> best = h.perms;
            for (const Perm& s : full.perms) best = std::min(best, conjugated_sorted(h, s));
            if (!seen.insert(best).second) continue;
            Group canon;
            canon.atoms = atoms;
            canon.perms = best;
            reps.push_back(canon);
        }
        for (size_t i = 0; i < reps.size(); ++i) {
            BGPair p;
            p.alg = BooleanAlg::with_atoms(atoms);
            p.group = reps[i];
            p.name = "b" + std::to_string(atoms) + "h" + std::to_string(i);
            out.push_back(std::move(p));
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// The named catalog
// ---------------------------------------------------------------------------

static CatalogEntry algebra_entry(EffectAlgebra e, const std::string& description,
                                  ExpectedProperties expected) {
    CatalogEntry c;
    c.name = e.name;
    c.kind = EntryKind::effect_algebra;
    c.description = description;
    c.expected = std::move(expected);
    c.algebra = std::move(e);
    return c;
}

static CatalogEntry lattice_entry(std::string name, Poset p, const std::string& description,
                                  bool distributive) {
    CatalogEntry c;
    c.name = std::move(name);
    c.kind = EntryKind::lattice;
    c.description = description;
    c.expected.distributive = distributive;
    c.lattice_poset = std::move(p);
    return c;
}

static CatalogEntry pair_entry(std::string name, int atoms, Group g,
                               const std::string& description, bool is_mv_pair,
                               std::string expected_quotient) {
    CatalogEntry c;
    c.name = std::move(name);
    c.kind = EntryKind::bg_pair;
    c.description = description;
    c.expected.is_mv_pair = is_mv_pair;
    c.expected.expected_quotient = std::move(expected_quotient);
    c.pair.alg = BooleanAlg::with_atoms(atoms);
    c.pair.group = std::move(g);
    c.pair.name = c.name;
    return c;
}

static ExpectedProperties mv_props(int jis, std::string quotient) {
    ExpectedProperties p;
    p.lattice_ordered = true;
    p.distributive = true;
    p.is_mv = true;
    p.rdp = true;
    p.rip = true;
    p.expected_quotient = std::move(quotient);
    p.join_irreducibles = jis;
    return p;
}

const std::vector<CatalogEntry>& catalog_entries() {
    static const std::vector<CatalogEntry> entries = [] {
        std::vector<CatalogEntry> v;
        for (int n = 2; n <= 6; ++n)
            v.push_back(algebra_entry(luka_chain(n),
                                      "chain of " + std::to_string(n) + " equidistant steps",
                                      mv_props(n - 1, "luka" + std::to_string(n))));
        for (int k = 1; k <= 4; ++k)
            v.push_back(algebra_entry(boolean_algebra_ea(k),
                                      "powerset of " + std::to_string(k) + " atoms",
                                      mv_props(k, "boolean" + std::to_string(k))));
        v.push_back(algebra_entry(product_ea(luka_chain(2), luka_chain(3)),
                                  "product of the two- and three-element chains",
                                  mv_props(3, "luka2xluka3")));
        v.push_back(algebra_entry(product_ea(luka_chain(3), luka_chain(3)),
                                  "square of the three-element chain", mv_props(4, "luka3xluka3")));

        {
            ExpectedProperties p;
            p.lattice_ordered = true;
            p.distributive = false;
            p.is_mv = false;
            p.rdp = false;
            p.rip = true;
            v.push_back(algebra_entry(mo2(), "two Boolean blocks sharing only 0 and 1",
                                      std::move(p)));
        }
        {
            ExpectedProperties p;
            p.lattice_ordered = false;
            p.is_mv = false;
            p.rdp = false;
            p.rip = false;
            v.push_back(algebra_entry(nonlattice6(),
                                      "six elements; a and b have no meet", std::move(p)));
        }

        v.push_back(lattice_entry("m3", diamond_m3(), "diamond with three central elements",
                                  false));
        v.push_back(lattice_entry("n5", pentagon_n5(), "pentagon", false));

        for (int k = 1; k <= 4; ++k) {
            v.push_back(pair_entry("boolean" + std::to_string(k) + "-full", k, full_aut(k),
                                   "powerset of " + std::to_string(k) +
                                       " atoms with every permutation",
                                   true, "luka" + std::to_string(k + 1)));
            Group id;
            id.atoms = k;
            id.perms.push_back(Perm::id(k));
            v.push_back(pair_entry("boolean" + std::to_string(k) + "-id", k, std::move(id),
                                   "powerset of " + std::to_string(k) +
                                       " atoms with the trivial group",
                                   true, "boolean" + std::to_string(k)));
        }
        v.push_back(pair_entry("cyclic3-nonmvpair", 3,
                               subgroup_closure(3, {Perm{{1, 2, 0}}}),
                               "three atoms rotated cyclically; the first pair condition fails",
                               false, ""));
        return v;
    }();
    return entries;
}

const CatalogEntry& builtin(const std::string& name) {
    for (const CatalogEntry& c : catalog_entries())
        if (c.name == name) return c;
    fail(Errc::unknown_name, "no catalog entry named \"" + name + "\"");
}

} // namespace mvrep
