#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mvrep/catalog.hpp"
#include "mvrep/rgen.hpp"

using namespace mvrep;

namespace {

template <typename F>
Errc code_of(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    return Errc::internal_error;  // not reached in the tests below
}

} // namespace

TEST_CASE("chains generate the full powerset of their nonzero elements") {
    for (int n = 2; n <= 6; ++n) {
        RGen r = rgenerate(luka_chain(n));
        CHECK(r.atom_count() == n - 1);
        for (Elem x = 0; x < n; ++x) CHECK(r.embed[x] == (Mask(1) << x) - 1);
        for (Mask z = 0; z <= r.bool_alg.full(); ++z) CHECK(r.phi(z) == popcount(z));
        for (int k = 0; k < r.atom_count(); ++k) CHECK(r.lower_cover_atom[k] == k);
    }
}

TEST_CASE("a powerset generates itself") {
    for (int k = 1; k <= 3; ++k) {
        RGen r = rgenerate(boolean_algebra_ea(k));
        CHECK(r.atom_count() == k);
        for (Elem x = 0; x < r.m.n; ++x) CHECK(r.embed[x] == Mask(x));
        for (Mask z = 0; z <= r.bool_alg.full(); ++z) CHECK(r.phi(z) == Elem(z));
    }
}

TEST_CASE("phi fixes every embedded element") {
    for (const char* name : {"luka5", "boolean3", "luka2xluka3", "luka3xluka3"}) {
        RGen r = rgenerate(builtin(name).algebra);
        for (Elem x = 0; x < r.m.n; ++x) {
            CHECK(r.phi(r.embed[x]) == x);
            CHECK(r.elem_of_mask[r.embed[x]] == x);
        }
    }
}

TEST_CASE("canonical chains are strictly increasing, even, and reproduce phi") {
    for (const char* name : {"luka4", "boolean3", "luka2xluka3"}) {
        RGen r = rgenerate(builtin(name).algebra);
        for (Mask z = 0; z <= r.bool_alg.full(); ++z) {
            ChainRep c = chain_representation(r, z);
            REQUIRE(c.elems.size() % 2 == 0);
            Mask rebuilt = 0;
            for (size_t i = 0; i + 1 < c.elems.size(); ++i)
                CHECK(r.order.leq(c.elems[i], c.elems[i + 1]));
            for (size_t i = 0; i < c.elems.size(); i += 2) {
                CHECK(c.elems[i] != c.elems[i + 1]);
                rebuilt ^= r.embed[c.elems[i]] ^ r.embed[c.elems[i + 1]];
            }
            CHECK(rebuilt == z);
            std::optional<Elem> v = phi_of_chain(r.m, r.order, c.elems);
            REQUIRE(v);
            CHECK(*v == r.phi(z));
        }
    }
}

TEST_CASE("two different chains for the same set agree") {
    RGen r = rgenerate(luka_chain(3));
    // {j0} as 1 (-) 0 and {j1} as 2 (-) 1 both evaluate under phi to 1/2.
    CHECK(phi_of_chain(r.m, r.order, {0, 1}) == 1);
    CHECK(phi_of_chain(r.m, r.order, {1, 2}) == 1);
    CHECK(r.phi(1) == 1);
    CHECK(r.phi(2) == 1);
    // Ill-shaped chains are rejected outright.
    CHECK(code_of([&] { phi_of_chain(r.m, r.order, {0, 1, 2}); }) == Errc::invalid_input);
    CHECK(code_of([&] { phi_of_chain(r.m, r.order, {2, 0}); }) == Errc::invalid_input);
}

TEST_CASE("phi is a surjective morphism, injective exactly for powersets") {
    EAMorphism chain_phi = phi_morphism(rgenerate(luka_chain(4)));
    CHECK(chain_phi.flags.is_morphism);
    CHECK(chain_phi.flags.is_surjective);
    CHECK_FALSE(chain_phi.flags.is_injective);

    EAMorphism cube_phi = phi_morphism(rgenerate(boolean_algebra_ea(3)));
    CHECK(cube_phi.flags.is_isomorphism());
}

TEST_CASE("translations between intervals preserve phi") {
    RGen r = rgenerate(luka_chain(3));
    IntervalIso t = translate_iso(r, 2, 1);
    CHECK(t.dom_top == 1);
    CHECK(t.cod_top == 2);
    CHECK(t.apply(1) == 2);
    CHECK(phi_preserving(r, t));
    IntervalIso back = t.inverse();
    CHECK(back.apply(2) == 1);

    CHECK(code_of([&] { translate_iso(r, 1, 2); }) == Errc::not_comparable);
}

TEST_CASE("between any two sets with the same image there is a phi-preserving interval map") {
    for (const char* name : {"luka4", "luka2xluka3"}) {
        RGen r = rgenerate(builtin(name).algebra);
        for (Mask u = 0; u <= r.bool_alg.full(); ++u)
            for (Mask v = 0; v <= r.bool_alg.full(); ++v) {
                if (r.phi(u) != r.phi(v)) continue;
                IntervalIso iso = between_iso(r, u, v);
                CHECK(iso.dom_top == u);
                CHECK(iso.cod_top == v);
                CHECK(iso.apply(u) == v);
                CHECK(phi_preserving(r, iso));
            }
        // Spot-check one interval map as a full effect-algebra isomorphism.
        Mask u = 1, v = r.embed[r.phi(1)];
        IntervalIso iso = between_iso(r, u, v);
        MorphismFlags f = validate_morphism(interval_algebra_of(r, u), interval_algebra_of(r, v),
                                            interval_iso_as_map(r, iso));
        CHECK(f.is_isomorphism());
    }
}

TEST_CASE("generation refuses non-MV inputs and oversized irreducible sets") {
    CHECK(code_of([] { rgenerate(builtin("mo2").algebra); }) == Errc::not_mv_effect);
    CHECK(code_of([] { rgenerate(builtin("nonlattice6").algebra); }) == Errc::not_mv_effect);
    CHECK(code_of([] { rgenerate(boolean_algebra_ea(4), 3); }) == Errc::cap_exceeded);
}
