#ifndef GRAPHZETA_ERRORS_HPP
#define GRAPHZETA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace graphzeta {

/// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input documents (JSON schema violations, bad rationals, ...).
/// The message names the offending field or entry.
struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(what) {}
};

/// Precondition violations on otherwise well-formed data
/// (series log of a series with a0 != 1, non-adjacent transfer map, ...).
struct DomainError : Error {
    explicit DomainError(const std::string& what) : Error(what) {}
};

/// A configured resource cap was exceeded (loop class caps and friends).
struct ResourceLimitError : Error {
    explicit ResourceLimitError(const std::string& what) : Error(what) {}
};

} // namespace graphzeta

#endif
