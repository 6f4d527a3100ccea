#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace bitlsh {

/// Base class for all errors thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid argument values: out-of-range parameters, dimension mismatches.
class ParamError : public Error {
public:
    using Error::Error;
};

/// Malformed textual input (bit strings, dataset text files).
class ParseError : public Error {
public:
    using Error::Error;
};

/// Malformed or truncated binary input. Carries the byte offset at which
/// the problem was detected.
class FormatError : public Error {
public:
    FormatError(const std::string& what, uint64_t offset)
        : Error(what + " (at byte offset " + std::to_string(offset) + ")"),
          offset_(offset) {}

    uint64_t offset() const noexcept { return offset_; }

private:
    uint64_t offset_ = 0;
};

/// Snapshot written by an unsupported format version.
class VersionError : public FormatError {
public:
    using FormatError::FormatError;
};

/// A randomized generator exhausted its retry budget.
class GenError : public Error {
public:
    using Error::Error;
};

}  // namespace bitlsh
