#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>

#include "mvrep/io.hpp"
#include "mvrep/rgen.hpp"

using namespace mvrep;

namespace {

std::optional<Error> error_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e;
    }
    return std::nullopt;
}

std::filesystem::path temp_file(const std::string& stem, const std::string& text) {
    std::filesystem::path p = std::filesystem::temp_directory_path() / ("mvrep_" + stem + ".txt");
    std::ofstream out(p);
    out << text;
    return p;
}

} // namespace

TEST_CASE("effect algebras survive the text round trip") {
    for (const char* name : {"luka4", "boolean3", "luka2xluka3", "mo2", "nonlattice6"}) {
        EffectAlgebra e = builtin(name).algebra;
        std::istringstream in(serialize_effect_algebra(e));
        EffectAlgebra back = parse_effect_algebra_text(in);
        CHECK(back.n == e.n);
        CHECK(back.zero == e.zero);
        CHECK(back.one == e.one);
        CHECK(back.sum == e.sum);
        CHECK(back.name == e.name);
        for (Elem x = 0; x < e.n; ++x) CHECK(back.label(x) == e.label(x));
    }
}

TEST_CASE("lattices survive the text round trip") {
    for (const char* name : {"m3", "n5"}) {
        Poset p = builtin(name).lattice_poset;
        std::istringstream in(serialize_lattice(p, name));
        std::string parsed_name;
        Poset back = parse_lattice_text(in, &parsed_name);
        CHECK(parsed_name == name);
        CHECK(back.n == p.n);
        CHECK(back.leq_ == p.leq_);
    }
}

TEST_CASE("pairs survive the text round trip") {
    for (const char* name : {"boolean3-full", "cyclic3-nonmvpair"}) {
        const BGPair& p = builtin(name).pair;
        std::istringstream in(serialize_bg_pair(p));
        BGPair back = parse_bg_pair_text(in);
        CHECK(back.alg.atoms == p.alg.atoms);
        CHECK(back.group.perms == p.group.perms);
    }
}

TEST_CASE("parse errors carry the offending line") {
    std::istringstream garbage("effect-algebra t\nelements 3\nzero 0\none 2\nbogus 1 2\n");
    std::optional<Error> e = error_of([&] { parse_effect_algebra_text(garbage); });
    REQUIRE(e);
    CHECK(e->code() == Errc::parse_error);
    CHECK(std::string(e->what()).find("line 5") != std::string::npos);

    std::istringstream clash(
        "effect-algebra t\nelements 3\nzero 0\none 2\nsum 0 1 1\nsum 1 1 2\nsum 1 0 2\n");
    e = error_of([&] { parse_effect_algebra_text(clash); });
    REQUIRE(e);
    CHECK(e->code() == Errc::parse_error);
    CHECK(std::string(e->what()).find("line 7") != std::string::npos);

    std::istringstream headless("elements 3\n");
    e = error_of([&] { parse_effect_algebra_text(headless); });
    REQUIRE(e);
    CHECK(e->code() == Errc::parse_error);

    std::istringstream notperm("bg-pair t\natoms 3\ngenerator 0 0 1\n");
    e = error_of([&] { parse_bg_pair_text(notperm); });
    REQUIRE(e);
    CHECK(e->code() == Errc::parse_error);
    CHECK(std::string(e->what()).find("line 3") != std::string::npos);
}

TEST_CASE("comments and blank lines are ignored") {
    std::istringstream in(
        "# a three-step chain\n\neffect-algebra t  # header\nelements 3\nzero 0\none 2\n"
        "sum 0 0 0\nsum 0 1 1\nsum 0 2 2\nsum 1 1 2\n");
    EffectAlgebra e = parse_effect_algebra_text(in);
    CHECK(validate_effect_algebra(e).ok());
    CHECK(find_isomorphism(e, luka_chain(3)) == std::vector<Elem>{0, 1, 2});
}

TEST_CASE("file dispatch by header keyword") {
    std::filesystem::path ea =
        temp_file("ea", serialize_effect_algebra(builtin("luka3").algebra));
    std::filesystem::path lat = temp_file("lat", serialize_lattice(builtin("m3").lattice_poset, "m3"));
    std::filesystem::path pair = temp_file("pair", serialize_bg_pair(builtin("boolean2-full").pair));

    CHECK(parse_any_file(ea.string()).kind == "effect-algebra");
    CHECK(parse_any_file(lat.string()).kind == "lattice");
    CHECK(parse_any_file(pair.string()).kind == "bg-pair");

    std::optional<Error> e =
        error_of([] { parse_any_file("/nonexistent/mvrep-missing.txt"); });
    REQUIRE(e);
    CHECK(e->code() == Errc::invalid_input);

    std::filesystem::remove(ea);
    std::filesystem::remove(lat);
    std::filesystem::remove(pair);
}

TEST_CASE("atom-set literals accept labels, indices, and the empty set") {
    RGen r = rgenerate(builtin("luka3").algebra);
    CHECK(parse_atom_set("{}", r.bool_alg) == 0);
    CHECK(parse_atom_set("{j0}", r.bool_alg) == 1);
    CHECK(parse_atom_set("{j0,j1}", r.bool_alg) == 3);
    CHECK(parse_atom_set("{1}", r.bool_alg) == 2);
    CHECK(parse_atom_set("{ j1 , j0 }", r.bool_alg) == 3);

    std::optional<Error> e = error_of([&] { parse_atom_set("{j9}", r.bool_alg); });
    REQUIRE(e);
    CHECK(e->code() == Errc::unknown_name);
}
