#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mvrep/catalog.hpp"
#include "mvrep/congruence.hpp"

using namespace mvrep;

TEST_CASE("partition normalisation orders blocks by least member") {
    Partition p = make_partition({2, 0, 2, 1});
    CHECK(p.size() == 3);
    CHECK(p.blocks == std::vector<std::vector<Elem>>{{0, 2}, {1}, {3}});
    CHECK(p.block_of == std::vector<int>{0, 1, 0, 2});
    CHECK(p.same(0, 2));
    CHECK_FALSE(p.same(0, 1));

    CHECK(identity_partition(3).size() == 3);
    CHECK(single_block(3).size() == 1);
}

TEST_CASE("the identity partition is a congruence with an isomorphic quotient") {
    EffectAlgebra e = builtin("luka2xluka3").algebra;
    Partition p = identity_partition(e.n);
    CongruenceVerdict v = check_congruence(e, p);
    CHECK(v.is_congruence());
    QuotientResult q = quotient(e, p);
    CHECK(q.algebra.sum == e.sum);
    CHECK(q.canonical_flags.is_isomorphism());
}

TEST_CASE("collapsing a chain to a point is a congruence onto the one-element algebra") {
    EffectAlgebra e = luka_chain(3);
    Partition p = single_block(e.n);
    CongruenceVerdict v = check_congruence(e, p);
    CHECK(v.c1);
    CHECK(v.c2);
    CHECK(v.c5);
    CHECK(v.c6);
    QuotientResult q = quotient(e, p);
    CHECK(q.algebra.n == 1);
    CHECK(q.algebra.zero == q.algebra.one);
    CHECK(validate_effect_algebra(q.algebra).ok());
}

TEST_CASE("chains admit no proper sum-compatible partition") {
    EffectAlgebra e = luka_chain(4);
    Partition p = make_partition({0, 0, 1, 1});
    CongruenceVerdict v = check_congruence(e, p);
    CHECK(v.c1);
    CHECK_FALSE(v.c2);
    REQUIRE(v.c2_witness);
    CHECK(*v.c2_witness == std::array<Elem, 4>{0, 1, 0, 1});
    CHECK_FALSE(v.is_congruence());
}

TEST_CASE("the orbit partition of the square under its swap is a congruence onto the 3-chain") {
    EffectAlgebra e = boolean_algebra_ea(2);
    Partition p = make_partition({0, 1, 1, 2});
    CongruenceVerdict v = check_congruence(e, p);
    CHECK(v.is_congruence());

    QuotientResult q = quotient(e, p);
    CHECK(q.algebra.n == 3);
    CHECK(find_isomorphism(q.algebra, luka_chain(3)) == std::vector<Elem>{0, 1, 2});
    CHECK(q.canonical_flags.is_morphism);
    CHECK(q.canonical_flags.is_full);
    CHECK(q.canonical_flags.is_surjective);

    // The three descriptions of the quotient order coincide on every pair.
    for (Elem x = 0; x < e.n; ++x)
        for (Elem y = 0; y < e.n; ++y) {
            QuotientOrderEquivalence eq = congruence_order_lemma(e, p, x, y);
            CHECK(eq.agree());
        }

    // A sanity point: classes {0} and {1,2} are comparable, via 0 <= 1.
    QuotientOrderEquivalence eq = congruence_order_lemma(e, p, 0, 1);
    CHECK(eq.class_leq);
}

TEST_CASE("non-congruences are rejected before quotienting") {
    EffectAlgebra e = luka_chain(4);
    Partition p = make_partition({0, 0, 1, 1});
    try {
        quotient(e, p);
        FAIL("expected a NotACongruence error");
    } catch (const Error& err) {
        CHECK(err.code() == Errc::not_a_congruence);
    }
}
