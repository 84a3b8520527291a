#pragma once

#include <stdexcept>
#include <string>

namespace ncp2 {

/// Base class for all library errors. The CLI maps subclasses to exit codes.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed or out-of-domain input (CLI exit code 2).
struct InvalidInputError : Error {
    explicit InvalidInputError(const std::string& msg) : Error(msg) {}
};

/// Two scalars from different fields (or different moduli) met in one
/// computation (CLI exit code 2).
struct FieldMismatchError : InvalidInputError {
    explicit FieldMismatchError(const std::string& msg) : InvalidInputError(msg) {}
};

/// A configured resource bound was exceeded (CLI exit code 3).
struct ResourceCapError : Error {
    explicit ResourceCapError(const std::string& msg) : Error(msg) {}
};

/// An identity the mathematics guarantees failed to hold, or a decision
/// procedure could not reach a verdict (CLI exit code 4).
struct InternalInconsistencyError : Error {
    explicit InternalInconsistencyError(const std::string& msg) : Error(msg) {}
};

}  // namespace ncp2
