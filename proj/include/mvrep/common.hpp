// Shared element/bitmask types and the error channel used across the library.
//
// Elements of every finite structure are dense indices 0..n-1.  Partial
// operation tables store kUndef where the operation is not defined.  Subsets
// of atoms are bitmasks (atom k <-> bit k).
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace mvrep {

using Elem = int;
using Mask = std::uint32_t;

inline constexpr Elem kUndef = -1;

inline int popcount(Mask m) { return __builtin_popcount(m); }

// True iff x is a subset of y.
inline bool subset(Mask x, Mask y) { return (x & ~y) == 0; }

// Error kinds for precondition failures.  Structural verdicts (axiom
// violations, failed isomorphism searches, ...) are returned as data, not
// thrown; exceptions are reserved for "this operation does not apply here".
enum class Errc {
    invalid_input,
    parse_error,
    unknown_name,
    not_a_lattice,
    no_bounds,
    not_distributive,
    not_lattice_ordered,
    not_mv_effect,
    mv_axiom_violation,
    not_a_congruence,
    ill_defined_sum,
    not_comparable,
    phi_mismatch,
    not_mv_pair,
    cap_exceeded,
    internal_error,
};

std::string errc_name(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc code, std::string message)
        : std::runtime_error(errc_name(code) + ": " + message), code_(code) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) { throw Error(code, message); }

// Internal consistency checks for facts the theory guarantees.  A failure
// here is a bug, never a property of the input.
inline void check_internal(bool ok, const std::string& what) {
    if (!ok) fail(Errc::internal_error, what);
}

std::string join_ints(const std::vector<int>& v, const std::string& sep = ",");

} // namespace mvrep
