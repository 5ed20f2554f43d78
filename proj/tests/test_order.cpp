#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mvrep/catalog.hpp"
#include "mvrep/order.hpp"

using namespace mvrep;

namespace {

Poset chain(int n) {
    Poset p = Poset::discrete(n);
    for (Elem a = 0; a < n; ++a)
        for (Elem b = a; b < n; ++b) p.set_leq(a, b);
    return p;
}

// 0 < 1,2 < 3
Poset diamond4() {
    Poset p = Poset::discrete(4);
    p.set_leq(0, 1);
    p.set_leq(0, 2);
    p.set_leq(1, 3);
    p.set_leq(2, 3);
    p.close();
    return p;
}

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

TEST_CASE("poset validation accepts orders and pins least witnesses") {
    CHECK(validate_poset(chain(4)).ok());
    CHECK(validate_poset(diamond4()).ok());

    Poset broken = Poset::discrete(2);
    broken.set_leq(0, 0, false);
    PosetReport r = validate_poset(broken);
    REQUIRE_FALSE(r.ok());
    CHECK(r.violations[0].axiom == "reflexivity");
    CHECK(r.violations[0].witness == std::vector<Elem>{0});

    Poset anti = Poset::discrete(2);
    anti.set_leq(0, 1);
    anti.set_leq(1, 0);
    r = validate_poset(anti);
    REQUIRE_FALSE(r.ok());
    CHECK(r.violations[0].axiom == "antisymmetry");
    CHECK(r.violations[0].witness == std::vector<Elem>{0, 1});

    Poset trans = Poset::discrete(3);
    trans.set_leq(0, 1);
    trans.set_leq(1, 2);
    r = validate_poset(trans);
    REQUIRE_FALSE(r.ok());
    CHECK(r.violations[0].axiom == "transitivity");
    CHECK(r.violations[0].witness == std::vector<Elem>{0, 1, 2});
}

TEST_CASE("lattice completion: chains and the diamond work, antichains do not") {
    LatticeBuildResult c = lattice_from_poset(chain(4));
    REQUIRE(c.lattice);
    CHECK(c.lattice->bottom == 0);
    CHECK(c.lattice->top == 3);
    CHECK(c.lattice->distributive);
    CHECK(c.lattice->join(1, 2) == 2);
    CHECK(c.lattice->meet(1, 2) == 1);

    LatticeBuildResult d = lattice_from_poset(diamond4());
    REQUIRE(d.lattice);
    CHECK(d.lattice->join(1, 2) == 3);
    CHECK(d.lattice->meet(1, 2) == 0);
    CHECK(d.lattice->distributive);

    LatticeBuildResult a = lattice_from_poset(Poset::discrete(2));
    CHECK_FALSE(a.lattice);
    REQUIRE(a.witness);
    CHECK(*a.witness == std::pair<Elem, Elem>{0, 1});
}

TEST_CASE("the diamond with three central elements is not distributive") {
    LatticeBuildResult r = lattice_from_poset(builtin("m3").lattice_poset);
    REQUIRE(r.lattice);
    CHECK_FALSE(r.lattice->distributive);
    REQUIRE(r.lattice->distrib_witness);
    CHECK(*r.lattice->distrib_witness == std::array<Elem, 3>{1, 2, 3});

    // No set representation on a non-distributive lattice.
    CHECK(code_of([&] { join_irreducibles(*r.lattice); }) == Errc::not_distributive);
}

TEST_CASE("the pentagon is not distributive") {
    LatticeBuildResult r = lattice_from_poset(builtin("n5").lattice_poset);
    REQUIRE(r.lattice);
    CHECK_FALSE(r.lattice->distributive);
    REQUIRE(r.lattice->distrib_witness);
    CHECK(*r.lattice->distrib_witness == std::array<Elem, 3>{2, 1, 3});
}

TEST_CASE("join-irreducibles and the set representation") {
    BoundedLattice c = *lattice_from_poset(chain(4)).lattice;
    JoinIrreducibleSet jc = join_irreducibles(c);
    CHECK(jc.elements == std::vector<Elem>{1, 2, 3});
    CHECK(birkhoff_embedding(c, jc) == std::vector<Mask>{0, 1, 3, 7});

    BoundedLattice d = *lattice_from_poset(diamond4()).lattice;
    JoinIrreducibleSet jd = join_irreducibles(d);
    CHECK(jd.elements == std::vector<Elem>{1, 2});
    CHECK(birkhoff_embedding(d, jd) == std::vector<Mask>{0, 1, 2, 3});
}

TEST_CASE("ranks and covers") {
    CHECK(order_ranks(chain(4)) == std::vector<int>{0, 1, 2, 3});
    CHECK(order_ranks(diamond4()) == std::vector<int>{0, 1, 1, 2});

    std::vector<std::pair<Elem, Elem>> cov = cover_pairs(diamond4());
    CHECK(cov == std::vector<std::pair<Elem, Elem>>{{0, 1}, {0, 2}, {1, 3}, {2, 3}});
}
