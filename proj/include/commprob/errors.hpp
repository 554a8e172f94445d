#pragma once

#include <stdexcept>
#include <string>

namespace commprob {

// Error taxonomy shared by the library and the CLI exit codes:
//   user / precondition errors -> exit 1
//   lemma violations (internal bug signal) -> exit 2
//   I/O and parse errors -> exit 3
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The caller handed us inputs outside an operation's contract.
struct PreconditionError : Error {
    using Error::Error;
};

// A construction exceeded a configured cap (group order, pair count, ...).
struct SizeLimitError : PreconditionError {
    using PreconditionError::PreconditionError;
};

// A fact the underlying proofs guarantee failed to hold. Never expected;
// signals an implementation bug rather than bad input.
struct LemmaViolationError : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

}  // namespace commprob
