#pragma once

#include <stdexcept>
#include <string>

namespace gtkk {

/// Raised when a request exceeds one of the enumeration size guards.
class GuardError : public std::runtime_error {
public:
    explicit GuardError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when an internal consistency check fails (e.g. a crystal component
/// that straddles the boundary of a KK set). Indicates a convention or
/// implementation fault, never bad user input.
class ConsistencyError : public std::logic_error {
public:
    explicit ConsistencyError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace gtkk
