#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mcvar {

enum class ErrorKind {
    ParseError,
    DimensionMismatch,
    InvalidProbability,
    EmptyInput,
    SpaceMismatch,
    NegativeScale,
    InvalidLevel,
    InvalidWeights,
    InfeasibleLevel,
    TooLarge,
    NotUnivariate,
    MultiplePleps,
    IoError,
    Usage,
};

constexpr std::string_view error_kind_name(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::InvalidProbability: return "InvalidProbability";
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::SpaceMismatch: return "SpaceMismatch";
    case ErrorKind::NegativeScale: return "NegativeScale";
    case ErrorKind::InvalidLevel: return "InvalidLevel";
    case ErrorKind::InvalidWeights: return "InvalidWeights";
    case ErrorKind::InfeasibleLevel: return "InfeasibleLevel";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::NotUnivariate: return "NotUnivariate";
    case ErrorKind::MultiplePleps: return "MultiplePleps";
    case ErrorKind::IoError: return "IoError";
    case ErrorKind::Usage: return "Usage";
    }
    return "UnknownError";
}

// All library failures throw this; the CLI renders it as "error:<kind>: <what>".
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }
    std::string_view kind_name() const noexcept { return error_kind_name(kind_); }

private:
    ErrorKind kind_;
};

} // namespace mcvar
