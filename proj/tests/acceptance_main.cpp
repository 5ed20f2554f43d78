// Acceptance runner: the ten headline verifications, one pass/fail line
// each, with the wall-clock budget for every criterion pinned right here.
// A criterion fails if its check fails OR it blows its budget.
#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "mvrep/suite.hpp"

int main() {
    using clock = std::chrono::steady_clock;
    mvrep::SuiteOptions opt;  // seed 0, enumeration to size 6, 8-atom cap

    struct Criterion {
        int number;
        mvrep::CheckResult (*check)(const mvrep::SuiteOptions&);
        double budget_s;      // 0 = shares the previous criterion's budget
    };
    const std::vector<Criterion> criteria = {
        {1, mvrep::check_axioms, 1.0},
        {2, mvrep::check_phi_well_defined, 30.0},
        {3, mvrep::check_phi_morphism, 5.0},
        {4, mvrep::check_mv_pairs_forward, 60.0},
        {5, mvrep::check_quotients, 5.0},
        {6, mvrep::check_counterexample, 1.0},
        {7, mvrep::check_representation, 300.0},
        {8, mvrep::check_kernel, 0.0},    // runtime counted against criterion 7
        {9, mvrep::check_lemmas, 60.0},
        {10, mvrep::check_coherence, 60.0},
    };

    int failed = 0;
    double carry = 0.0, carry_budget = 0.0;
    for (const Criterion& c : criteria) {
        mvrep::CheckResult r;
        auto t0 = clock::now();
        try {
            r = c.check(opt);
        } catch (const std::exception& ex) {
            r.pass = false;
            r.detail = std::string("exception: ") + ex.what();
        }
        double secs = std::chrono::duration<double>(clock::now() - t0).count();

        double budget = c.budget_s;
        double charged = secs;
        if (budget == 0.0) {              // shared budget: previous time counts too
            budget = carry_budget;
            charged = carry + secs;
        } else {
            carry = secs;
            carry_budget = budget;
        }
        bool in_time = charged <= budget;
        bool pass = r.pass && in_time;
        failed += pass ? 0 : 1;

        std::printf("%s  criterion %2d  %-18s %6.2fs/%gs  %s%s\n", pass ? "PASS" : "FAIL",
                    c.number, r.name.c_str(), secs, budget, r.detail.c_str(),
                    in_time ? "" : "  [over budget]");
        std::fflush(stdout);
    }

    if (failed) {
        std::printf("%d criterion(s) FAILED\n", failed);
        return 1;
    }
    std::printf("all 10 criteria passed\n");
    return 0;
}
