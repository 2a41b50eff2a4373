#pragma once

#include <stdexcept>
#include <string>

namespace sheetlab {

/// Base for every rejection of user-supplied data.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Text that is not valid JSON or does not have the expected schema.
class ParseError : public InputError {
public:
    using InputError::InputError;
};

/// Matrix is not square, or sizes of two operands disagree.
class ShapeError : public InputError {
public:
    using InputError::InputError;
};

/// A matrix declared (or required to be) in sl(n) has nonzero trace.
class TraceError : public InputError {
public:
    using InputError::InputError;
};

/// Request exceeds a size guard (symbolic minors, verification size).
class ResourceGuardError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace sheetlab
