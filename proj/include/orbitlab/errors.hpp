#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace orbitlab {

enum class ErrorKind {
    DivisionByZero,
    ReducibleModulus,
    ZeroDivisor,
    RingMismatch,
    DegreeBudgetExceeded,
    TauDegreeBudgetExceeded,
    NotAdditive,
    SyntaxError,
    UndefinedSymbol,
    MixedVariables,
    ValidationError,
    InvalidArgument,
};

const char* error_kind_name(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

    bool is_budget() const noexcept {
        return kind_ == ErrorKind::DegreeBudgetExceeded || kind_ == ErrorKind::TauDegreeBudgetExceeded;
    }

private:
    ErrorKind kind_;
};

// Parse errors carry the byte offset into the input text.
class SyntaxError : public Error {
public:
    SyntaxError(ErrorKind kind, std::size_t position, const std::string& msg)
        : Error(kind, msg + " at position " + std::to_string(position)), position_(position), message_(msg) {}

    std::size_t position() const noexcept { return position_; }
    // The message without the position suffix.
    const std::string& message() const noexcept { return message_; }

private:
    std::size_t position_;
    std::string message_;
};

// Scenario validation errors name the offending field.
class ValidationError : public Error {
public:
    ValidationError(std::string field, const std::string& msg)
        : Error(ErrorKind::ValidationError, field + ": " + msg), field_(std::move(field)) {}

    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) { throw Error(kind, msg); }

}  // namespace orbitlab
