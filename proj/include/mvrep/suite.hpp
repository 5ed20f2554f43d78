// The property suites: one callable check per verification area, shared by
// the CLI `suite` command and the acceptance runner.
#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace mvrep {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;                   // counts, witnesses on failure
};

struct SuiteOptions {
    std::uint64_t seed = 0;
    int max_n = 6;                        // effect-algebra enumeration bound
    int max_atoms = 8;
    bool inject_fault = false;            // demonstration mode: flip one sum entry first
};

// The checks in fixed order:
//   axioms, phi-well-defined, phi-morphism, mv-pairs-forward, quotients,
//   non-mv-pair-counterexample, representation, kernel, lemmas, coherence.
std::vector<CheckResult> run_suite(const SuiteOptions& opt);

CheckResult check_axioms(const SuiteOptions& opt);
CheckResult check_phi_well_defined(const SuiteOptions& opt);
CheckResult check_phi_morphism(const SuiteOptions& opt);
CheckResult check_mv_pairs_forward(const SuiteOptions& opt);
CheckResult check_quotients(const SuiteOptions& opt);
CheckResult check_counterexample(const SuiteOptions& opt);
CheckResult check_representation(const SuiteOptions& opt);
CheckResult check_kernel(const SuiteOptions& opt);
CheckResult check_lemmas(const SuiteOptions& opt);
CheckResult check_coherence(const SuiteOptions& opt);

} // namespace mvrep
