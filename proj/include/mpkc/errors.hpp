#ifndef MPKC_ERRORS_HPP
#define MPKC_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mpkc {

// Caller-supplied data violates a precondition (bad vertex, malformed file, ...).
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input file could not be parsed; the message names the offending line.
struct ParseError : InputError {
    using InputError::InputError;
};

// An externally supplied solution failed validation; carries the offending vertex.
struct ValidationError : InputError {
    ValidationError(const std::string& msg, int vertex)
        : InputError(msg), vertex(vertex) {}
    int vertex;
};

// A structural property that holds for every (bull,E)-free graph failed.
// The witness lists the vertices certifying that the input is outside the class.
struct ClassViolationError : std::runtime_error {
    explicit ClassViolationError(const std::string& msg, std::vector<int> witness = {})
        : std::runtime_error(msg), witness(std::move(witness)) {}
    std::vector<int> witness;
};

// Exhaustive guessing exceeded the configured budget.
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A solver invariant failed: this is a bug, never a property of the input.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace mpkc

#endif
