#pragma once

#include <stdexcept>
#include <string>

// Error taxonomy shared by every module. Each condition that callers are
// expected to distinguish gets its own type; the CLI maps them to exit codes
// (input errors vs precondition failures) by catching the base classes below.

namespace dissect {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad user input: malformed files, unknown ids, invalid specs.
struct InputError : Error {
    using Error::Error;
};

// Structurally valid input that violates an operation's precondition.
struct PreconditionError : Error {
    using Error::Error;
};

// --- poset ---
struct CycleError : InputError {
    using InputError::InputError;
};
struct NotGraded : InputError {
    using InputError::InputError;
};
struct NoUniqueMinimum : InputError {
    using InputError::InputError;
};
struct NotComparable : InputError {
    using InputError::InputError;
};

// --- arrangement ---
struct NegativeCount : PreconditionError {
    using PreconditionError::PreconditionError;
};
struct MissingAssignment : InputError {
    using InputError::InputError;
};
struct NotAChain : InputError {
    using InputError::InputError;
};
struct PreconditionFailed : PreconditionError {
    using PreconditionError::PreconditionError;
};

// --- builders ---
struct DuplicateHyperplane : InputError {
    using InputError::InputError;
};
struct Duplicate : InputError {
    using InputError::InputError;
};
struct ParallelNormals : InputError {
    using InputError::InputError;
};
struct EmptySpec : InputError {
    using InputError::InputError;
};
struct NotCellular2D : PreconditionError {
    using PreconditionError::PreconditionError;
};

// --- oracle ---
struct CapExceeded : PreconditionError {
    using PreconditionError::PreconditionError;
};
struct NotCentral : InputError {
    using InputError::InputError;
};
struct OddPairing : PreconditionError {
    using PreconditionError::PreconditionError;
};
struct NotCellular : PreconditionError {
    using PreconditionError::PreconditionError;
};

// --- io / cli ---
struct ParseError : InputError {
    using InputError::InputError;
};
struct ValidationError : InputError {
    using InputError::InputError;
};
struct UnknownCommand : InputError {
    using InputError::InputError;
};

}  // namespace dissect
