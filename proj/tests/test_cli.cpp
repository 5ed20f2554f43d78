// Integration test for the command-line tool.  Receives the binary path as
// argv[1], runs it against catalog inputs, and checks exit codes and output
// stability.  Plain main: no framework, one line per failed expectation.
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>

namespace {

int failures = 0;

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& cli, const std::string& args) {
    RunResult r;
    std::string cmd = cli + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
        std::cerr << "cannot spawn: " << cmd << "\n";
        ++failures;
        return r;
    }
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

void expect(bool ok, const std::string& what) {
    if (!ok) {
        std::cerr << "FAILED: " << what << "\n";
        ++failures;
    }
}

void expect_exit(const RunResult& r, int code, const std::string& what) {
    expect(r.exit_code == code,
           what + " (exit " + std::to_string(r.exit_code) + ", wanted " + std::to_string(code) + ")");
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: test_cli <path-to-cli>\n";
        return 1;
    }
    const std::string cli = argv[1];

    expect_exit(run(cli, "--help"), 0, "--help");
    expect_exit(run(cli, "frobnicate"), 2, "unknown subcommand");
    expect_exit(run(cli, "validate"), 2, "missing argument");
    expect_exit(run(cli, "validate /nonexistent/nothing.txt"), 2, "missing file");

    RunResult cat = run(cli, "catalog");
    expect_exit(cat, 0, "catalog");
    expect(contains(cat.out, "luka3") && contains(cat.out, "cyclic3-nonmvpair"),
           "catalog lists the named entries");

    RunResult dump = run(cli, "catalog luka3");
    expect_exit(dump, 0, "catalog luka3");
    expect(contains(dump.out, "effect-algebra luka3") && contains(dump.out, "sum 1 1 2"),
           "catalog dump is the file format");

    expect_exit(run(cli, "validate luka4"), 0, "validate luka4");
    RunResult mo2 = run(cli, "validate mo2");
    expect_exit(mo2, 0, "validate mo2");
    expect(contains(mo2.out, "mv: no"), "mo2 is flagged non-MV");
    RunResult nl = run(cli, "validate nonlattice6 --json");
    expect_exit(nl, 0, "validate nonlattice6");
    expect(contains(nl.out, "\"lattice_ordered\": false"), "nonlattice6 order verdict");

    RunResult m3 = run(cli, "validate m3 --json");
    expect_exit(m3, 0, "validate m3");
    expect(contains(m3.out, "\"distributive\": false"), "m3 distributivity verdict");

    RunResult rg = run(cli, "rgen luka3");
    expect_exit(rg, 0, "rgen luka3");
    expect(contains(rg.out, "boolean algebra size: 4"), "rgen size line");

    RunResult ph = run(cli, "phi luka3 --element {j0}");
    expect_exit(ph, 0, "phi luka3 {j0}");
    expect(contains(ph.out, "= 1/2"), "phi value printed");

    expect_exit(run(cli, "mvpair boolean2-full"), 0, "mvpair boolean2-full");
    RunResult cyc = run(cli, "mvpair cyclic3-nonmvpair --json");
    expect_exit(cyc, 1, "mvpair cyclic3-nonmvpair");
    expect(contains(cyc.out, "\"witness_f\": [") && contains(cyc.out, "\"mv_pair\": false"),
           "cyclic witness reported");

    RunResult quo = run(cli, "quotient boolean3-full");
    expect_exit(quo, 0, "quotient boolean3-full");
    expect(contains(quo.out, "4 classes"), "quotient class count");
    expect_exit(run(cli, "quotient cyclic3-nonmvpair"), 1, "quotient of a non-pair");

    RunResult rep = run(cli, "represent luka4 --json");
    expect_exit(rep, 0, "represent luka4");
    expect(contains(rep.out, "\"ok\": true"), "represent verdict");

    const std::string dot_path = "cli_test_diagram.dot";
    RunResult dot = run(cli, "represent luka3 --dot " + dot_path);
    expect_exit(dot, 0, "represent luka3 --dot");
    {
        std::string text;
        if (FILE* f = fopen(dot_path.c_str(), "r")) {
            char buf[4096];
            size_t n;
            while ((n = fread(buf, 1, sizeof buf, f)) > 0) text.append(buf, n);
            fclose(f);
            remove(dot_path.c_str());
        }
        expect(contains(text, "digraph") && contains(text, "cluster_q"),
               "dot file holds the three clusters");
    }

    RunResult v1 = run(cli, "rgen luka2xluka3 --json");
    RunResult v2 = run(cli, "rgen luka2xluka3 --json");
    expect_exit(v1, 0, "rgen json");
    expect(!v1.out.empty() && v1.out == v2.out, "json output is stable between runs");

    expect_exit(run(cli, "phi luka3 --element {zzz}"), 2, "bad atom label");

    if (failures) {
        std::cerr << failures << " CLI expectation(s) failed\n";
        return 1;
    }
    std::cout << "cli: all expectations met\n";
    return 0;
}
