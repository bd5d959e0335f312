#pragma once

#include <stdexcept>
#include <string>

namespace arrowlab {

/// Base class for all arrowlab errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Two states passed to tensor() share a subsystem label.
class DuplicateLabelError : public Error {
public:
    explicit DuplicateLabelError(const std::string& label)
        : Error("duplicate subsystem label: " + label) {}
};

/// A subsystem label was not found in the state it was used against.
class UnknownLabelError : public Error {
public:
    explicit UnknownLabelError(const std::string& label)
        : Error("unknown subsystem label: " + label) {}
};

/// Two states were compared that do not carry identical label lists.
class LabelMismatchError : public Error {
public:
    LabelMismatchError() : Error("subsystem label lists do not match") {}
};

/// A matrix passed as a projector fails P*P = P within tolerance.
class InvalidProjectorError : public Error {
public:
    explicit InvalidProjectorError(double deviation)
        : Error("matrix is not idempotent (||P*P - P|| = " +
                std::to_string(deviation) + ")") {}
};

/// A matrix passed as a unitary fails U†U = I within tolerance.
class InvalidUnitaryError : public Error {
public:
    InvalidUnitaryError() : Error("matrix is not unitary") {}
};

/// Invalid argument to a domain operation (out-of-range n, bad axis, ...).
class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error(what) {}
};

/// No future collision exists (every ball is at rest).
class NoEventError : public Error {
public:
    NoEventError() : Error("no future collision event: all balls at rest") {}
};

/// Configuration parsing or validation failure; message carries the key path.
class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& what) : Error(what) {}
};

}  // namespace arrowlab
