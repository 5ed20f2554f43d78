#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mvrep/catalog.hpp"
#include "mvrep/effect.hpp"

using namespace mvrep;

TEST_CASE("the equidistant chains satisfy the axioms and derive a total order") {
    for (int n = 2; n <= 6; ++n) {
        EffectAlgebra e = luka_chain(n);
        CHECK(validate_effect_algebra(e).ok());
        EffectOrder o = derive_order(e);
        for (Elem a = 0; a < n; ++a)
            for (Elem b = 0; b < n; ++b) CHECK(o.leq(a, b) == (a <= b));
        for (Elem a = 0; a < n; ++a) CHECK(o.prime[a] == n - 1 - a);
    }
    EffectOrder o = derive_order(luka_chain(3));
    CHECK(o.ominus(2, 1) == 1);
    CHECK(o.ominus(1, 2) == kUndef);
}

TEST_CASE("single-entry faults are reported with witnesses") {
    // One-sided deletion breaks commutativity.
    EffectAlgebra e = luka_chain(3);
    e.sum[static_cast<size_t>(0) * e.n + 1] = kUndef;
    ValidationReport r = validate_effect_algebra(e);
    REQUIRE_FALSE(r.ok());
    CHECK(r.violations[0].axiom == "E1");
    CHECK_FALSE(r.violations[0].witness.empty());

    // Removing 1/2 (+) 1/2 leaves 1/2 with no complement.
    e = luka_chain(3);
    e.set_sum(1, 1, kUndef);
    r = validate_effect_algebra(e);
    REQUIRE_FALSE(r.ok());
    bool e3 = false;
    for (const auto& v : r.violations) e3 = e3 || v.axiom == "E3";
    CHECK(e3);

    // 1/2 (+) 1/2 = 1/2 collides with 1/2 (+) 0.
    e = luka_chain(3);
    e.set_sum(1, 1, 1);
    CHECK_FALSE(validate_effect_algebra(e).ok());

    // A defined 1 (+) 1 breaks the zero-one law.
    e = luka_chain(3);
    e.set_sum(2, 2, 0);
    r = validate_effect_algebra(e);
    REQUIRE_FALSE(r.ok());
    bool e4 = false;
    for (const auto& v : r.violations) e4 = e4 || v.axiom == "E4";
    CHECK(e4);
}

TEST_CASE("two blocks sharing the bounds: lattice-ordered but on no account MV") {
    EffectAlgebra e = builtin("mo2").algebra;
    REQUIRE(validate_effect_algebra(e).ok());

    LatticeStructureResult ls = lattice_structure(e);
    REQUIRE(ls.lattice);
    CHECK(ls.lattice->join(1, 3) == 5);
    CHECK(ls.lattice->meet(1, 3) == 0);

    MvCharacterizations mc = mv_characterizations(e);
    CHECK_FALSE(mc.a);
    CHECK_FALSE(mc.b);
    CHECK_FALSE(mc.c);
    CHECK_FALSE(mc.d);
    std::pair<Elem, Elem> w{1, 3};
    CHECK(*mc.witness_a == w);
    CHECK(*mc.witness_b == w);
    CHECK(*mc.witness_c == w);
    CHECK(*mc.witness_d == w);
    CHECK_FALSE(is_mv_effect(e));

    RieszResult rz = riesz_properties(e);
    CHECK_FALSE(rz.rdp);
    CHECK(*rz.rdp_witness == std::array<Elem, 3>{1, 3, 4});
    CHECK(rz.rip);
}

TEST_CASE("six elements whose two maximal atoms-sums have no meet") {
    EffectAlgebra e = builtin("nonlattice6").algebra;
    REQUIRE(validate_effect_algebra(e).ok());
    LatticeStructureResult ls = lattice_structure(e);
    CHECK_FALSE(ls.lattice);
    REQUIRE(ls.witness);
    CHECK(*ls.witness == std::pair<Elem, Elem>{1, 2});

    RieszResult rz = riesz_properties(e);
    CHECK_FALSE(rz.rdp);
    CHECK_FALSE(rz.rip);
}

TEST_CASE("total-operation counterpart: there and back again") {
    for (const char* name : {"luka4", "boolean2", "luka2xluka3"}) {
        EffectAlgebra e = builtin(name).algebra;
        MvAlgebra m = to_mv_algebra(e);
        CHECK(validate_mv_algebra(m).ok());
        EffectAlgebra back = from_mv_algebra(m);
        CHECK(back.sum == e.sum);

        MvAlgebra bad = m;
        bad.neg[0] = 0;  // 0 and 1 collapse
        CHECK_FALSE(validate_mv_algebra(bad).ok());
    }
}

TEST_CASE("morphism flags on the doubling embedding") {
    EffectAlgebra src = luka_chain(3), dst = luka_chain(5);
    MorphismFlags f = validate_morphism(src, dst, {0, 2, 4});
    CHECK(f.is_morphism);
    CHECK(f.is_injective);
    CHECK_FALSE(f.is_surjective);
    CHECK_FALSE(f.is_isomorphism());

    // Collapsing everything to zero cannot preserve the unit.
    MorphismFlags g = validate_morphism(src, dst, {0, 0, 0});
    CHECK_FALSE(g.is_morphism);
}

TEST_CASE("isomorphism search: positives, negatives, canonical maps") {
    CHECK(find_isomorphism(luka_chain(3), luka_chain(3)) == std::vector<Elem>{0, 1, 2});

    EffectAlgebra sq = product_ea(luka_chain(2), luka_chain(2));
    std::optional<std::vector<Elem>> iso = find_isomorphism(sq, boolean_algebra_ea(2));
    REQUIRE(iso);
    CHECK(validate_morphism(sq, boolean_algebra_ea(2), *iso).is_isomorphism());

    CHECK_FALSE(find_isomorphism(luka_chain(4), boolean_algebra_ea(2)));
    CHECK_FALSE(find_isomorphism(luka_chain(3), luka_chain(4)));
}
