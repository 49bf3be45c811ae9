#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bt1 {

/// Failure categories raised by the library. Every thrown bt1::Error carries
/// exactly one of these, so callers can branch without parsing messages.
enum class ErrorCode {
    EmptyWord,
    BadCharacter,
    NotABijection,
    UnknownLabel,
    NotPrime,
    DegreeTooLarge,
    ShapeMismatch,
    Singular,
    FieldMismatch,
    NotCoprime,
    DegreeTooSmall,
    BudgetExceeded,
    NotDivisible,
    OutOfRange,
    ExcludedResidue,
    NotRealizable,
    DegreeOne,
    SearchExhausted,
    NotSelfDual,
    NotPrimitive,
    InvalidSpec,
    Overflow,
    ParseError,
    VerificationFailed,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& detail)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + detail), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// Raised for a character outside {f,v}; position is 0-based into the input.
class BadCharacterError : public Error {
public:
    BadCharacterError(std::size_t position, char ch)
        : Error(ErrorCode::BadCharacter,
                "character '" + std::string(1, ch) + "' at position " + std::to_string(position)),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

inline std::string_view error_code_name(ErrorCode code) {
    switch (code) {
    case ErrorCode::EmptyWord: return "EmptyWord";
    case ErrorCode::BadCharacter: return "BadCharacter";
    case ErrorCode::NotABijection: return "NotABijection";
    case ErrorCode::UnknownLabel: return "UnknownLabel";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::DegreeTooLarge: return "DegreeTooLarge";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::Singular: return "Singular";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::DegreeTooSmall: return "DegreeTooSmall";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::NotDivisible: return "NotDivisible";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::ExcludedResidue: return "ExcludedResidue";
    case ErrorCode::NotRealizable: return "NotRealizable";
    case ErrorCode::DegreeOne: return "DegreeOne";
    case ErrorCode::SearchExhausted: return "SearchExhausted";
    case ErrorCode::NotSelfDual: return "NotSelfDual";
    case ErrorCode::NotPrimitive: return "NotPrimitive";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::VerificationFailed: return "VerificationFailed";
    }
    return "Unknown";
}

} // namespace bt1
