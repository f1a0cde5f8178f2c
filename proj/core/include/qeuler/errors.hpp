#pragma once

#include <stdexcept>
#include <string>

namespace qeuler {

// Error taxonomy for the whole library.  Every failure condition the public
// contracts promise gets its own type so callers (and tests) can catch it
// precisely instead of string-matching.

// A rational or rational function was constructed with denominator zero.
struct ZeroDenominator : std::domain_error {
    explicit ZeroDenominator(const std::string& what) : std::domain_error(what) {}
};

// Division by an exact zero value.
struct DivisionByZero : std::domain_error {
    explicit DivisionByZero(const std::string& what) : std::domain_error(what) {}
};

// Evaluation of a rational function at a point where the denominator vanishes.
struct PoleError : std::domain_error {
    explicit PoleError(const std::string& what) : std::domain_error(what) {}
};

// q -> 1 limit requested for a function with a genuine pole at q = 1.
struct PoleAtOne : std::domain_error {
    explicit PoleAtOne(const std::string& what) : std::domain_error(what) {}
};

// A rational with p in the denominator where a p-adic integer is required.
struct PDenominator : std::domain_error {
    explicit PDenominator(const std::string& what) : std::domain_error(what) {}
};

// A p-adic series failed to reach the requested precision within the term cap.
struct NoConvergence : std::runtime_error {
    explicit NoConvergence(const std::string& what) : std::runtime_error(what) {}
};

// q0 outside the admissible p-adic domain (need |q0 - 1|_p < 1, q0 != +-1 where stated).
struct BadQ : std::domain_error {
    explicit BadQ(const std::string& what) : std::domain_error(what) {}
};

// An index outside the documented domain of an operation.
struct RangeError : std::out_of_range {
    explicit RangeError(const std::string& what) : std::out_of_range(what) {}
};

// A broken internal invariant (e.g. an exact polynomial division left a
// remainder).  Always a bug in this library, never user input.
struct InternalError : std::logic_error {
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

} // namespace qeuler
