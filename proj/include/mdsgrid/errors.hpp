#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace mdsgrid {

/// Base of every error the library raises. `code()` is a stable short name
/// ("vertical-edge", "normalization-integrality", ...) that tests and the CLI
/// match on; `what()` carries a human-readable message.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

/// An argument lies outside the mathematical domain of an operation.
class DomainError : public Error {
public:
    using Error::Error;
};

/// User input (weights, triangle text, flags) failed validation.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// A prime or other run configuration is not admissible.
class ConfigurationError : public Error {
public:
    using Error::Error;
};

/// A proven identity failed at runtime. Always a bug, never a math outcome.
class InvariantViolation : public Error {
public:
    using Error::Error;
};

}  // namespace mdsgrid
