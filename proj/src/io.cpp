#include "mvrep/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace mvrep {

namespace {

[[noreturn]] void bad(int line, const std::string& msg) {
    fail(Errc::parse_error, "line " + std::to_string(line) + ": " + msg);
}

std::string trimmed(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

// Lines are significant after stripping '#' comments and surrounding blanks.
struct LineReader {
    std::istream& in;
    int lineno = 0;

    bool next(std::vector<std::string>& tokens, std::string& raw) {
        std::string line;
        while (std::getline(in, line)) {
            ++lineno;
            size_t hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            raw = trimmed(line);
            if (raw.empty()) continue;
            tokens.clear();
            std::istringstream ss(raw);
            std::string t;
            while (ss >> t) tokens.push_back(t);
            return true;
        }
        return false;
    }
};

int to_int(const std::string& tok, int line, const std::string& what) {
    try {
        size_t pos = 0;
        int v = std::stoi(tok, &pos);
        if (pos != tok.size()) bad(line, what + " is not a number: " + tok);
        return v;
    } catch (const Error&) {
        throw;
    } catch (const std::exception&) {
        bad(line, what + " is not a number: " + tok);
    }
}

// The text after the keyword and the first argument, for labels with spaces.
std::string rest_after(const std::string& raw, int skip_tokens, int line) {
    std::istringstream ss(raw);
    std::string t;
    for (int i = 0; i < skip_tokens; ++i)
        if (!(ss >> t)) bad(line, "missing argument");
    std::string rest;
    std::getline(ss, rest);
    rest = trimmed(rest);
    if (rest.empty()) bad(line, "missing label text");
    return rest;
}

void expect_header(const std::vector<std::string>& tokens, const std::string& raw,
                   const std::string& keyword, int line, std::string& name) {
    if (tokens.empty() || tokens[0] != keyword)
        bad(line, "expected a \"" + keyword + " <name>\" header");
    if (tokens.size() < 2) bad(line, "the header needs a name");
    name = trimmed(raw.substr(keyword.size()));
}

} // namespace

// ---------------------------------------------------------------------------
// Parsers
// ---------------------------------------------------------------------------

Poset parse_lattice_text(std::istream& in, std::string* name_out) {
    LineReader rd{in};
    std::vector<std::string> tok;
    std::string raw, name;
    if (!rd.next(tok, raw)) bad(rd.lineno, "empty input");
    expect_header(tok, raw, "lattice", rd.lineno, name);
    if (name_out) *name_out = name;

    int n = -1;
    Poset p;
    std::vector<std::pair<int, int>> rels;
    std::vector<std::pair<int, std::string>> labels;
    while (rd.next(tok, raw)) {
        if (tok[0] == "elements") {
            if (tok.size() != 2) bad(rd.lineno, "elements takes one count");
            if (n >= 0) bad(rd.lineno, "elements declared twice");
            n = to_int(tok[1], rd.lineno, "element count");
            if (n < 1 || n > 4096) bad(rd.lineno, "element count out of range");
        } else if (tok[0] == "leq") {
            if (tok.size() != 3) bad(rd.lineno, "leq takes two elements");
            rels.emplace_back(to_int(tok[1], rd.lineno, "element"),
                              to_int(tok[2], rd.lineno, "element"));
            if (n < 0) bad(rd.lineno, "leq before elements");
            if (rels.back().first < 0 || rels.back().first >= n || rels.back().second < 0 ||
                rels.back().second >= n)
                bad(rd.lineno, "element index out of range");
        } else if (tok[0] == "label") {
            if (tok.size() < 3) bad(rd.lineno, "label takes an element and text");
            int i = to_int(tok[1], rd.lineno, "element");
            if (n < 0) bad(rd.lineno, "label before elements");
            if (i < 0 || i >= n) bad(rd.lineno, "element index out of range");
            labels.emplace_back(i, rest_after(raw, 2, rd.lineno));
        } else {
            bad(rd.lineno, "unknown directive \"" + tok[0] + "\"");
        }
    }
    if (n < 0) bad(rd.lineno, "missing elements declaration");

    p = Poset::discrete(n);
    for (auto [a, b] : rels) p.set_leq(a, b);
    p.close();
    if (!labels.empty()) {
        p.labels.assign(n, "");
        for (int i = 0; i < n; ++i) p.labels[i] = std::to_string(i);
        for (auto& [i, text] : labels) p.labels[i] = text;
    }
    return p;
}

EffectAlgebra parse_effect_algebra_text(std::istream& in) {
    LineReader rd{in};
    std::vector<std::string> tok;
    std::string raw, name;
    if (!rd.next(tok, raw)) bad(rd.lineno, "empty input");
    expect_header(tok, raw, "effect-algebra", rd.lineno, name);

    int n = -1, zero = -1, one = -1;
    std::vector<std::array<int, 3>> sums;
    std::vector<int> cell;                 // declared value per unordered pair, kUndef = free
    std::vector<std::pair<int, std::string>> labels;
    auto in_range = [&](int i) { return i >= 0 && i < n; };
    while (rd.next(tok, raw)) {
        if (tok[0] == "elements") {
            if (tok.size() != 2) bad(rd.lineno, "elements takes one count");
            if (n >= 0) bad(rd.lineno, "elements declared twice");
            n = to_int(tok[1], rd.lineno, "element count");
            if (n < 1 || n > 512) bad(rd.lineno, "element count out of range");
            cell.assign(static_cast<size_t>(n) * n, kUndef);
        } else if (tok[0] == "zero" || tok[0] == "one") {
            if (tok.size() != 2) bad(rd.lineno, tok[0] + " takes one element");
            if (n < 0) bad(rd.lineno, tok[0] + " before elements");
            int v = to_int(tok[1], rd.lineno, "element");
            if (!in_range(v)) bad(rd.lineno, "element index out of range");
            int& slot = tok[0] == "zero" ? zero : one;
            if (slot >= 0) bad(rd.lineno, tok[0] + " declared twice");
            slot = v;
        } else if (tok[0] == "sum") {
            if (tok.size() != 4) bad(rd.lineno, "sum takes three elements");
            if (n < 0) bad(rd.lineno, "sum before elements");
            std::array<int, 3> s = {to_int(tok[1], rd.lineno, "element"),
                                    to_int(tok[2], rd.lineno, "element"),
                                    to_int(tok[3], rd.lineno, "element")};
            if (!in_range(s[0]) || !in_range(s[1]) || !in_range(s[2]))
                bad(rd.lineno, "element index out of range");
            // Symmetric entries fill in automatically; a contradictory
            // duplicate is a parse error at the offending line.
            int& slot = cell[static_cast<size_t>(std::min(s[0], s[1])) * n +
                             std::max(s[0], s[1])];
            if (slot != kUndef && slot != s[2])
                bad(rd.lineno, "sum " + tok[1] + " " + tok[2] + " declared as both " +
                                   std::to_string(slot) + " and " + tok[3]);
            slot = s[2];
            sums.push_back(s);
        } else if (tok[0] == "label") {
            if (tok.size() < 3) bad(rd.lineno, "label takes an element and text");
            if (n < 0) bad(rd.lineno, "label before elements");
            int i = to_int(tok[1], rd.lineno, "element");
            if (!in_range(i)) bad(rd.lineno, "element index out of range");
            labels.emplace_back(i, rest_after(raw, 2, rd.lineno));
        } else {
            bad(rd.lineno, "unknown directive \"" + tok[0] + "\"");
        }
    }
    if (n < 0) bad(rd.lineno, "missing elements declaration");
    if (zero < 0) bad(rd.lineno, "missing zero declaration");
    if (one < 0) bad(rd.lineno, "missing one declaration");

    EffectAlgebra e = EffectAlgebra::empty_table(n, zero, one);
    for (auto [a, b, c] : sums) e.set_sum(a, b, c);
    if (!labels.empty()) {
        e.labels.assign(n, "");
        for (auto& [i, text] : labels) e.labels[i] = text;
    }
    e.name = name;
    return e;
}

BGPair parse_bg_pair_text(std::istream& in) {
    LineReader rd{in};
    std::vector<std::string> tok;
    std::string raw, name;
    if (!rd.next(tok, raw)) bad(rd.lineno, "empty input");
    expect_header(tok, raw, "bg-pair", rd.lineno, name);

    int atoms = -1;
    std::vector<Perm> gens;
    while (rd.next(tok, raw)) {
        if (tok[0] == "atoms") {
            if (tok.size() != 2) bad(rd.lineno, "atoms takes one count");
            if (atoms >= 0) bad(rd.lineno, "atoms declared twice");
            atoms = to_int(tok[1], rd.lineno, "atom count");
            if (atoms < 1 || atoms > 10) bad(rd.lineno, "atom count out of range");
        } else if (tok[0] == "generator") {
            if (atoms < 0) bad(rd.lineno, "generator before atoms");
            if (static_cast<int>(tok.size()) != atoms + 1)
                bad(rd.lineno, "generator needs " + std::to_string(atoms) + " images");
            Perm p;
            std::vector<char> seen(atoms, 0);
            for (int i = 1; i <= atoms; ++i) {
                int v = to_int(tok[i], rd.lineno, "atom image");
                if (v < 0 || v >= atoms || seen[v]) bad(rd.lineno, "not a permutation");
                seen[v] = 1;
                p.img.push_back(v);
            }
            gens.push_back(std::move(p));
        } else {
            bad(rd.lineno, "unknown directive \"" + tok[0] + "\"");
        }
    }
    if (atoms < 0) bad(rd.lineno, "missing atoms declaration");

    BGPair p;
    p.alg = BooleanAlg::with_atoms(atoms);
    p.group = subgroup_closure(atoms, gens);
    p.name = name;
    return p;
}

// ---------------------------------------------------------------------------
// Serializers
// ---------------------------------------------------------------------------

std::string serialize_lattice(const Poset& p, const std::string& name) {
    std::ostringstream out;
    out << "lattice " << (name.empty() ? "unnamed" : name) << "\n";
    out << "elements " << p.n << "\n";
    for (int i = 0; i < static_cast<int>(p.labels.size()); ++i)
        out << "label " << i << " " << p.labels[i] << "\n";
    for (auto [a, b] : cover_pairs(p)) out << "leq " << a << " " << b << "\n";
    return out.str();
}

std::string serialize_effect_algebra(const EffectAlgebra& e) {
    std::ostringstream out;
    out << "effect-algebra " << (e.name.empty() ? "unnamed" : e.name) << "\n";
    out << "elements " << e.n << "\n";
    out << "zero " << e.zero << "\n";
    out << "one " << e.one << "\n";
    for (int i = 0; i < static_cast<int>(e.labels.size()); ++i)
        if (!e.labels[i].empty()) out << "label " << i << " " << e.labels[i] << "\n";
    for (Elem a = 0; a < e.n; ++a)
        for (Elem b = a; b < e.n; ++b)
            if (e.defined(a, b)) out << "sum " << a << " " << b << " " << e.add(a, b) << "\n";
    return out.str();
}

std::string serialize_bg_pair(const BGPair& p) {
    std::ostringstream out;
    out << "bg-pair " << (p.name.empty() ? "unnamed" : p.name) << "\n";
    out << "atoms " << p.alg.atoms << "\n";
    // Every element is written out; closure on re-parse reproduces the group.
    for (const Perm& g : p.group.perms) {
        out << "generator";
        for (int v : g.img) out << " " << v;
        out << "\n";
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// File dispatch and small literals
// ---------------------------------------------------------------------------

ParsedFile parse_any_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(Errc::invalid_input, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();

    std::string keyword;
    {
        std::istringstream scan(text);
        LineReader rd{scan};
        std::vector<std::string> tok;
        std::string raw;
        if (!rd.next(tok, raw)) fail(Errc::parse_error, "line 1: empty input");
        keyword = tok[0];
    }

    ParsedFile f;
    std::istringstream body(text);
    if (keyword == "lattice") {
        f.value = parse_lattice_text(body, &f.name);
        f.kind = "lattice";
    } else if (keyword == "effect-algebra") {
        EffectAlgebra e = parse_effect_algebra_text(body);
        f.name = e.name;
        f.value = std::move(e);
        f.kind = "effect-algebra";
    } else if (keyword == "bg-pair") {
        BGPair p = parse_bg_pair_text(body);
        f.name = p.name;
        f.value = std::move(p);
        f.kind = "bg-pair";
    } else {
        fail(Errc::parse_error,
             "unrecognised header \"" + keyword + "\" (expected lattice, effect-algebra or bg-pair)");
    }
    return f;
}

Mask parse_atom_set(const std::string& text, const BooleanAlg& alg) {
    std::string s = trimmed(text);
    if (s.size() < 2 || s.front() != '{' || s.back() != '}')
        fail(Errc::parse_error, "atom set must look like {j0,j2}");
    s = s.substr(1, s.size() - 2);
    Mask out = 0;
    std::istringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trimmed(item);
        if (item.empty()) fail(Errc::parse_error, "empty atom in set");
        int idx = -1;
        for (int k = 0; k < alg.atoms; ++k)
            if (k < static_cast<int>(alg.atom_labels.size()) && alg.atom_labels[k] == item)
                idx = k;
        if (idx < 0) {
            try {
                size_t pos = 0;
                idx = std::stoi(item, &pos);
                if (pos != item.size()) idx = -1;
            } catch (const std::exception&) {
                idx = -1;
            }
        }
        if (idx < 0 || idx >= alg.atoms)
            fail(Errc::unknown_name, "no atom named \"" + item + "\"");
        out |= Mask(1) << idx;
    }
    return out;
}

} // namespace mvrep
