#pragma once

#include <stdexcept>
#include <string>

namespace sfpl {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Invalid configuration or precondition violation (maps to CLI usage errors).
class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& msg) : Error(msg) {}
};

/// Argument outside the domain of an evaluation (e.g. x outside bounds).
class DomainError : public Error {
public:
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

/// Linear system could not be solved reliably: an exactly zero pivot, a
/// non-finite solution or a large backward-error residual. Typically
/// signals D too small for the chosen L.
class SingularSystemError : public Error {
public:
    explicit SingularSystemError(const std::string& msg) : Error(msg) {}
};

/// Cost returned a non-finite value or derivative at an evaluation point.
class SingularCostError : public Error {
public:
    explicit SingularCostError(const std::string& msg) : Error(msg) {}
};

/// Not enough data to carry out a fit or summary.
class InsufficientDataError : public Error {
public:
    explicit InsufficientDataError(const std::string& msg) : Error(msg) {}
};

/// Operation requires state that has not been populated yet.
class StateError : public Error {
public:
    explicit StateError(const std::string& msg) : Error(msg) {}
};

} // namespace sfpl
