#pragma once

#include <stdexcept>
#include <string>

namespace maxcon {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input: increasing sequence, negative term, bad vertex id, ...
struct ValidationError : Error {
    using Error::Error;
};

// realize() was asked for a sequence with no simple realization.
struct NotGraphicError : ValidationError {
    using ValidationError::ValidationError;
};

// An edge-exchange whose preconditions do not hold against the target graph.
struct IllegalExchangeError : ValidationError {
    using ValidationError::ValidationError;
};

// union_edges() with overlapping edge sets.
struct OverlapError : ValidationError {
    using ValidationError::ValidationError;
};

// Operation requires a connected graph.
struct DisconnectedError : ValidationError {
    using ValidationError::ValidationError;
};

// Weak-set classification requested outside the lambda < delta regime.
struct NotApplicableError : ValidationError {
    using ValidationError::ValidationError;
};

// A theorem hypothesis does not hold for the given instance.
struct HypothesisViolation : Error {
    explicit HypothesisViolation(std::string clause_)
        : Error("hypothesis violation: " + clause_), clause(std::move(clause_)) {}
    std::string clause;
};

// A named numeric bound of a theorem precondition fails.
struct PreconditionFailed : Error {
    using Error::Error;
};

// A state the theorems rule out was reached: an implementation bug,
// or invalid input that slipped past validation.
struct TheoremContradiction : Error {
    using Error::Error;
};

// Instance exceeds a brute-force guard.
struct ScaleError : Error {
    using Error::Error;
};

}  // namespace maxcon
