#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace changekit {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class DomainErrorKind {
    NonFinite,
    NonPositive,
    Negative,
    GrowthOnly,
    StagnantPair,
    EqualPastValues,
    SignMismatch,
    InvalidConstructedPair,
    SingularParameter,
    OutOfRange,
};

std::string_view to_string(DomainErrorKind kind) noexcept;

/// An argument lies outside the mathematical domain of the operation.
class DomainError : public Error {
public:
    DomainError(DomainErrorKind kind, const std::string& what)
        : Error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    [[nodiscard]] DomainErrorKind kind() const noexcept { return kind_; }

private:
    DomainErrorKind kind_;
};

/// A computation produced a non-finite value or failed its own postcondition.
class NumericalError : public Error {
public:
    using Error::Error;
};

/// Malformed input text. Line numbers are 1-based.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    [[nodiscard]] std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Well-formed input carrying an invalid value.
class ValidationError : public Error {
public:
    ValidationError(std::string label, std::string column, const std::string& what)
        : Error(format(label, column, what)), label_(std::move(label)), column_(std::move(column)) {}

    [[nodiscard]] const std::string& label() const noexcept { return label_; }
    [[nodiscard]] const std::string& column() const noexcept { return column_; }

private:
    static std::string format(const std::string& label, const std::string& column,
                              const std::string& what) {
        std::string msg;
        if (!label.empty()) msg += "row '" + label + "'";
        if (!column.empty()) msg += (msg.empty() ? "column '" : ", column '") + column + "'";
        return msg.empty() ? what : msg + ": " + what;
    }

    std::string label_;
    std::string column_;
};

}  // namespace changekit
