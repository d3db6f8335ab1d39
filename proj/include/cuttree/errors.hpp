#pragma once

#include <stdexcept>
#include <string>

namespace cuttree {

// Base for every error the library raises on purpose.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input: bad files, out-of-range vertices, u == v, size mismatches.
class InputError : public Error {
public:
    using Error::Error;
};

// Exhaustive enumeration refused because the ground set is above the cap.
class EnumerationCapError : public InputError {
public:
    using InputError::InputError;
};

// A set function violated a hypothesis the requested operation relies on
// (e.g. the intersection of all minimizers is not itself a minimizer).
class PropertyViolation : public Error {
public:
    using Error::Error;
};

// An operation was called outside its precondition (e.g. a vertex that is not
// minimal for the order it is supposed to be minimal in).
class PreconditionViolation : public Error {
public:
    using Error::Error;
};

// A postcondition that must hold for correct code on a valid input failed.
class InternalConsistencyError : public Error {
public:
    using Error::Error;
};

}  // namespace cuttree
