#pragma once

#include <stdexcept>
#include <string>

namespace symdet {

enum class ErrorCode {
    NotPrime,
    CharacteristicTwo,
    DivisionByZero,
    FieldMismatch,
    SyntaxError,
    CoefficientError,
    MissingAssignment,
    UnknownVariable,
    SelfSubstitution,
    NotSquare,
    Singular,
    SingularTrailingBlock,
    NotSymmetric,
    SizeMismatch,
    ShiftExhausted,
    SizeLimitExceeded,
    BudgetExceeded,
    UnknownExample,
    InvalidArgument,
};

const char* error_code_name(ErrorCode code);

/// Library-wide exception type; carries a machine-checkable code plus a message.
class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

  private:
    ErrorCode code_;
};

} // namespace symdet
