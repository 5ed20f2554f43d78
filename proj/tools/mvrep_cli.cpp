// Command-line front end: validation, generation, pair verdicts, quotients,
// the representation round trip, the property suite and the catalog.
// Exit codes: 0 = success / positive verdict, 1 = negative verdict,
// 2 = usage, parse or internal error.
#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "mvrep/dot.hpp"
#include "mvrep/io.hpp"
#include "mvrep/suite.hpp"

using mvrep::BGPair;
using mvrep::Elem;
using mvrep::Errc;
using mvrep::Error;
using mvrep::Mask;
using json = nlohmann::ordered_json;

namespace {

int exit_code_for(Errc c) {
    switch (c) {
        case Errc::not_a_lattice:
        case Errc::not_distributive:
        case Errc::not_lattice_ordered:
        case Errc::not_mv_effect:
        case Errc::mv_axiom_violation:
        case Errc::not_a_congruence:
        case Errc::ill_defined_sum:
        case Errc::not_mv_pair:
        case Errc::phi_mismatch:
            return 1;                     // a verdict about the input
        default:
            return 2;                     // unusable input or an internal fault
    }
}

// A positional argument names either a catalog entry or a file on disk.
mvrep::ParsedFile resolve(const std::string& spec) {
    for (const mvrep::CatalogEntry& c : mvrep::catalog_entries()) {
        if (c.name != spec) continue;
        mvrep::ParsedFile f;
        f.name = c.name;
        switch (c.kind) {
            case mvrep::EntryKind::effect_algebra:
                f.kind = "effect-algebra";
                f.value = c.algebra;
                break;
            case mvrep::EntryKind::lattice:
                f.kind = "lattice";
                f.value = c.lattice_poset;
                break;
            case mvrep::EntryKind::bg_pair:
                f.kind = "bg-pair";
                f.value = c.pair;
                break;
        }
        return f;
    }
    if (std::filesystem::exists(spec)) return mvrep::parse_any_file(spec);
    mvrep::fail(Errc::unknown_name, "\"" + spec + "\" is neither a catalog name nor a file");
}

const mvrep::EffectAlgebra& want_algebra(const mvrep::ParsedFile& f) {
    if (auto* e = std::get_if<mvrep::EffectAlgebra>(&f.value)) return *e;
    mvrep::fail(Errc::invalid_input, "this command expects an effect algebra, got a " + f.kind);
}

const BGPair& want_pair(const mvrep::ParsedFile& f) {
    if (auto* p = std::get_if<BGPair>(&f.value)) return *p;
    mvrep::fail(Errc::invalid_input, "this command expects a bg-pair, got a " + f.kind);
}

json violations_json(const std::vector<mvrep::AxiomViolation>& vs) {
    json arr = json::array();
    for (const auto& v : vs)
        arr.push_back({{"axiom", v.axiom}, {"witness", v.witness}, {"detail", v.detail}});
    return arr;
}

json perm_json(const mvrep::Perm& p) { return json(p.img); }

void write_dot(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) mvrep::fail(Errc::invalid_input, "cannot write \"" + path + "\"");
    out << text;
}

// ---------------------------------------------------------------------------

int cmd_validate(const std::string& spec, bool as_json, const std::string& dot) {
    mvrep::ParsedFile f = resolve(spec);
    if (f.kind == "effect-algebra") {
        const mvrep::EffectAlgebra& e = want_algebra(f);
        mvrep::ValidationReport rep = mvrep::validate_effect_algebra(e);
        json j{{"command", "validate"}, {"name", f.name}, {"kind", f.kind},
               {"valid", rep.ok()}, {"violations", violations_json(rep.violations)}};
        if (rep.ok()) {
            mvrep::LatticeStructureResult ls = mvrep::lattice_structure(e);
            j["lattice_ordered"] = bool(ls.lattice);
            mvrep::RieszResult rz = mvrep::riesz_properties(e);
            j["rdp"] = rz.rdp;
            j["rip"] = rz.rip;
            if (ls.lattice) {
                mvrep::MvCharacterizations mc = mvrep::mv_characterizations(e);
                j["mv"] = mc.all();
            }
        }
        if (!dot.empty()) {
            if (!rep.ok()) mvrep::fail(Errc::invalid_input, "no diagram for an invalid table");
            write_dot(dot, mvrep::dot_effect_algebra(e, f.name));
        }
        if (as_json) {
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << f.kind << " " << f.name << ": " << rep.summary() << "\n";
            if (rep.ok()) {
                std::cout << "lattice-ordered: " << (j["lattice_ordered"].get<bool>() ? "yes" : "no")
                          << "\n";
                if (j.contains("mv")) std::cout << "mv: " << (j["mv"].get<bool>() ? "yes" : "no") << "\n";
                std::cout << "rdp: " << (j["rdp"].get<bool>() ? "yes" : "no")
                          << "  rip: " << (j["rip"].get<bool>() ? "yes" : "no") << "\n";
            }
        }
        return rep.ok() ? 0 : 1;
    }
    if (f.kind == "lattice") {
        const mvrep::Poset& p = std::get<mvrep::Poset>(f.value);
        mvrep::PosetReport rep = mvrep::validate_poset(p);
        json j{{"command", "validate"}, {"name", f.name}, {"kind", f.kind}, {"valid", rep.ok()}};
        json arr = json::array();
        for (const auto& v : rep.violations)
            arr.push_back({{"axiom", v.axiom}, {"witness", v.witness}});
        j["violations"] = arr;
        bool is_lattice = false;
        if (rep.ok()) {
            mvrep::LatticeBuildResult lb = mvrep::lattice_from_poset(p);
            is_lattice = bool(lb.lattice);
            j["lattice"] = is_lattice;
            if (lb.lattice) {
                j["distributive"] = lb.lattice->distributive;
                if (lb.lattice->distrib_witness) {
                    const auto& w = *lb.lattice->distrib_witness;
                    j["distributivity_witness"] = {w[0], w[1], w[2]};
                }
            } else {
                j["witness"] = {lb.witness->first, lb.witness->second};
            }
        }
        if (!dot.empty()) {
            if (!rep.ok()) mvrep::fail(Errc::invalid_input, "no diagram for an invalid order");
            write_dot(dot, mvrep::dot_poset(p, f.name));
        }
        if (as_json) std::cout << j.dump(2) << "\n";
        else {
            std::cout << f.kind << " " << f.name << ": " << (rep.ok() ? "valid order" : "invalid order")
                      << "\n";
            if (rep.ok()) {
                std::cout << "lattice: " << (is_lattice ? "yes" : "no") << "\n";
                if (j.contains("distributive"))
                    std::cout << "distributive: " << (j["distributive"].get<bool>() ? "yes" : "no")
                              << "\n";
            }
        }
        return rep.ok() && is_lattice ? 0 : 1;
    }
    // bg-pair: well-formedness is enforced at parse time; report the verdict.
    const BGPair& p = want_pair(f);
    mvrep::MvPairVerdict v = mvrep::mv_pair_verdict(p);
    json j{{"command", "validate"}, {"name", f.name}, {"kind", f.kind},
           {"atoms", p.alg.atoms}, {"group_order", p.group.order()},
           {"mvp1", v.mvp1.holds}, {"mvp2", v.mvp2.holds}, {"mv_pair", v.is_mv_pair()}};
    if (as_json) std::cout << j.dump(2) << "\n";
    else
        std::cout << f.kind << " " << f.name << ": group of order " << p.group.order() << " on "
                  << p.alg.atoms << " atoms, " << (v.is_mv_pair() ? "an MV-pair" : "not an MV-pair")
                  << "\n";
    return v.is_mv_pair() ? 0 : 1;
}

int cmd_rgen(const std::string& spec, bool as_json, const std::string& dot) {
    mvrep::ParsedFile f = resolve(spec);
    mvrep::RGen r = mvrep::rgenerate(want_algebra(f));
    if (!dot.empty())
        write_dot(dot, mvrep::dot_effect_algebra(mvrep::boolean_effect_algebra(r.bool_alg),
                                                 "B(" + f.name + ")"));
    json atoms = json::array();
    for (int k = 0; k < r.atom_count(); ++k) atoms.push_back(r.m.label(r.atom_elem(k)));
    json embed = json::object();
    for (Elem x = 0; x < r.m.n; ++x)
        embed[r.m.label(x)] = r.bool_alg.element_label(r.embed[x]);
    json fibres = json::object();
    for (Elem x = 0; x < r.m.n; ++x) {
        int count = 0;
        for (Mask z = 0; z <= r.bool_alg.full(); ++z)
            if (r.phi(z) == x) ++count;
        fibres[r.m.label(x)] = count;
    }
    json j{{"command", "rgen"},   {"name", f.name},  {"irreducibles", atoms},
           {"size", r.bool_alg.size()}, {"embedding", embed}, {"fibre_sizes", fibres}};
    if (as_json) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "irreducibles of " << f.name << ":";
        for (const auto& a : atoms) std::cout << " " << a.get<std::string>();
        std::cout << "\nboolean algebra size: " << r.bool_alg.size() << "\n";
        for (Elem x = 0; x < r.m.n; ++x)
            std::cout << "embed " << r.m.label(x) << " = "
                      << r.bool_alg.element_label(r.embed[x]) << "  (fibre "
                      << fibres[r.m.label(x)].get<int>() << ")\n";
    }
    return 0;
}

int cmd_phi(const std::string& spec, const std::string& element, bool as_json) {
    mvrep::ParsedFile f = resolve(spec);
    mvrep::RGen r = mvrep::rgenerate(want_algebra(f));
    Mask x = mvrep::parse_atom_set(element, r.bool_alg);
    mvrep::ChainRep chain = mvrep::chain_representation(r, x);
    json steps = json::array();
    for (Elem c : chain.elems) steps.push_back(r.m.label(c));
    json j{{"command", "phi"},
           {"name", f.name},
           {"element", r.bool_alg.element_label(x)},
           {"canonical_chain", steps},
           {"value", r.m.label(r.phi(x))}};
    if (as_json) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "phi(" << r.bool_alg.element_label(x) << ") = " << r.m.label(r.phi(x));
        if (!chain.elems.empty()) {
            std::cout << "  via chain ";
            for (size_t i = 0; i < chain.elems.size(); ++i)
                std::cout << (i ? " <= " : "") << r.m.label(chain.elems[i]);
        }
        std::cout << "\n";
    }
    return 0;
}

int cmd_mvpair(const std::string& spec, bool as_json) {
    mvrep::ParsedFile f = resolve(spec);
    const BGPair& p = want_pair(f);
    mvrep::MvPairVerdict v = mvrep::mv_pair_verdict(p);
    json j{{"command", "mvpair"}, {"name", f.name}, {"atoms", p.alg.atoms},
           {"group_order", p.group.order()}};
    json m1{{"holds", v.mvp1.holds}};
    if (!v.mvp1.holds) {
        m1["witness_a"] = p.alg.element_label(*v.mvp1.witness_a);
        m1["witness_b"] = p.alg.element_label(*v.mvp1.witness_b);
        m1["witness_f"] = perm_json(*v.mvp1.witness_f);
    }
    json m2{{"holds", v.mvp2.holds}};
    if (!v.mvp2.holds) {
        const auto& w = *v.mvp2.witness;
        m2["witness"] = {p.alg.element_label(w[0]), p.alg.element_label(w[1]),
                         p.alg.element_label(w[2])};
    }
    j["mvp1"] = m1;
    j["mvp2"] = m2;
    j["mv_pair"] = v.is_mv_pair();
    if (as_json) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << f.name << ": mvp1 " << (v.mvp1.holds ? "holds" : "fails");
        if (!v.mvp1.holds)
            std::cout << " at a=" << p.alg.element_label(*v.mvp1.witness_a)
                      << " b=" << p.alg.element_label(*v.mvp1.witness_b) << " f="
                      << json(v.mvp1.witness_f->img).dump();
        std::cout << ", mvp2 " << (v.mvp2.holds ? "holds" : "fails") << " -> "
                  << (v.is_mv_pair() ? "MV-pair" : "not an MV-pair") << "\n";
    }
    return v.is_mv_pair() ? 0 : 1;
}

int cmd_quotient(const std::string& spec, bool as_json) {
    mvrep::ParsedFile f = resolve(spec);
    const BGPair& p = want_pair(f);
    mvrep::QuotientMvResult q = mvrep::build_quotient_mv(p);
    json classes = json::array();
    for (const auto& blk : q.orbits.blocks) {
        json members = json::array();
        for (Elem x : blk) members.push_back(p.alg.element_label(Mask(x)));
        classes.push_back(members);
    }
    json j{{"command", "quotient"},
           {"name", f.name},
           {"classes", classes},
           {"table", mvrep::serialize_effect_algebra(q.quotient.algebra)}};
    if (as_json) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "quotient of " << f.name << " has " << q.orbits.size() << " classes\n";
        for (int k = 0; k < q.orbits.size(); ++k)
            std::cout << "[" << k << "] = " << classes[k].dump() << "\n";
        std::cout << mvrep::serialize_effect_algebra(q.quotient.algebra);
    }
    return 0;
}

int cmd_represent(const std::string& spec, int max_atoms, bool as_json,
                  const std::string& dot) {
    mvrep::ParsedFile f = resolve(spec);
    mvrep::RepresentationResult res = mvrep::verify_representation(want_algebra(f), max_atoms);
    if (!dot.empty())
        write_dot(dot, mvrep::dot_representation(res.rgen, res.quotient.quotient.algebra,
                                                 res.quotient.orbits));
    json iso = json::array();
    for (size_t k = 0; k < res.iso_map.size(); ++k)
        iso.push_back(res.rgen.m.label(res.iso_map[k]));
    json j{{"command", "represent"},
           {"name", f.name},
           {"irreducibles", res.rgen.atom_count()},
           {"group_order", res.group.order()},
           {"mvp1", res.pair_verdict.mvp1.holds},
           {"mvp2", res.pair_verdict.mvp2.holds},
           {"classes", res.quotient.orbits.size()},
           {"iso", iso},
           {"ok", res.ok}};
    if (as_json) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << f.name << ": " << res.rgen.atom_count() << " irreducibles, group of order "
                  << res.group.order() << ", " << res.quotient.orbits.size() << " classes\n";
        std::cout << "pair verdict: " << (res.pair_verdict.is_mv_pair() ? "MV-pair" : "not an MV-pair")
                  << "\n";
        std::cout << "quotient isomorphic to " << f.name << ": " << (res.ok ? "yes" : "no") << "\n";
    }
    return res.ok ? 0 : 1;
}

int cmd_suite(const mvrep::SuiteOptions& opt, bool as_json) {
    std::vector<mvrep::CheckResult> results = mvrep::run_suite(opt);
    bool all = true;
    json arr = json::array();
    for (const auto& c : results) {
        all = all && c.pass;
        arr.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
        if (!as_json)
            std::cout << (c.pass ? "PASS" : "FAIL") << " " << c.name << ": " << c.detail << "\n";
    }
    if (as_json) {
        json j{{"command", "suite"}, {"seed", opt.seed}, {"max_n", opt.max_n},
               {"max_atoms", opt.max_atoms}, {"checks", arr}, {"all_pass", all}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << (all ? "all checks passed" : "some checks FAILED") << "\n";
    }
    return all ? 0 : 1;
}

int cmd_catalog(const std::string& name, bool as_json) {
    if (!name.empty()) {
        const mvrep::CatalogEntry& c = mvrep::builtin(name);
        switch (c.kind) {
            case mvrep::EntryKind::effect_algebra:
                std::cout << mvrep::serialize_effect_algebra(c.algebra);
                break;
            case mvrep::EntryKind::lattice:
                std::cout << mvrep::serialize_lattice(c.lattice_poset, c.name);
                break;
            case mvrep::EntryKind::bg_pair:
                std::cout << mvrep::serialize_bg_pair(c.pair);
                break;
        }
        return 0;
    }
    json arr = json::array();
    for (const mvrep::CatalogEntry& c : mvrep::catalog_entries()) {
        const char* kind = c.kind == mvrep::EntryKind::effect_algebra ? "effect-algebra"
                           : c.kind == mvrep::EntryKind::lattice     ? "lattice"
                                                                     : "bg-pair";
        arr.push_back({{"name", c.name}, {"kind", kind}, {"description", c.description}});
        if (!as_json)
            std::cout << c.name << "  (" << kind << ")  " << c.description << "\n";
    }
    if (as_json) std::cout << json{{"command", "catalog"}, {"entries", arr}}.dump(2) << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite MV-effect algebras, generated Boolean algebras and their pairs"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable output");

    std::string spec, element, name, dot;
    int max_atoms = 8;

    CLI::App* validate = app.add_subcommand("validate", "axioms / order / pair verdict");
    validate->add_option("input", spec, "catalog name or file")->required();
    validate->add_option("--dot", dot, "write the Hasse diagram to this path");

    CLI::App* rgen = app.add_subcommand("rgen", "generated Boolean algebra and embedding");
    rgen->add_option("input", spec, "catalog name or file")->required();
    rgen->add_option("--dot", dot, "write the generated algebra's Hasse diagram to this path");

    CLI::App* phi = app.add_subcommand("phi", "evaluate phi on an atom set");
    phi->add_option("input", spec, "catalog name or file")->required();
    phi->add_option("--element", element, "atom set like {j0,j2}")->required();

    CLI::App* mvpair = app.add_subcommand("mvpair", "check the two pair conditions");
    mvpair->add_option("input", spec, "catalog name or file")->required();

    CLI::App* quotient = app.add_subcommand("quotient", "quotient an MV-pair by its orbits");
    quotient->add_option("input", spec, "catalog name or file")->required();

    CLI::App* represent = app.add_subcommand("represent", "full representation round trip");
    represent->add_option("input", spec, "catalog name or file")->required();
    represent->add_option("--max-atoms", max_atoms, "irreducible cap")->capture_default_str();
    represent->add_option("--dot", dot, "write the three-cluster diagram to this path");

    mvrep::SuiteOptions opt;
    CLI::App* suite = app.add_subcommand("suite", "run the property suite");
    suite->add_option("--seed", opt.seed, "sampling seed")->capture_default_str();
    suite->add_option("--max-n", opt.max_n, "enumeration bound")->capture_default_str();
    suite->add_option("--max-atoms", opt.max_atoms, "irreducible cap")->capture_default_str();
    suite->add_flag("--inject-fault", opt.inject_fault, "demonstrate a detected fault");

    CLI::App* catalog = app.add_subcommand("catalog", "list or dump built-in instances");
    catalog->add_option("name", name, "dump one entry in file format");

    // Let the global --json flag appear after the subcommand as well.
    for (CLI::App* s : {validate, rgen, phi, mvpair, quotient, represent, suite, catalog})
        s->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (validate->parsed()) return cmd_validate(spec, as_json, dot);
        if (rgen->parsed()) return cmd_rgen(spec, as_json, dot);
        if (phi->parsed()) return cmd_phi(spec, element, as_json);
        if (mvpair->parsed()) return cmd_mvpair(spec, as_json);
        if (quotient->parsed()) return cmd_quotient(spec, as_json);
        if (represent->parsed()) return cmd_represent(spec, max_atoms, as_json, dot);
        if (suite->parsed()) return cmd_suite(opt, as_json);
        if (catalog->parsed()) return cmd_catalog(name, as_json);
    } catch (const Error& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return exit_code_for(ex.code());
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }
    return 2;
}
