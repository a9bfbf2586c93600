#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace arak {

enum class ErrorCode {
    NotSquarefree,
    OutOfRange,
    Singular,
    NotAnIdeal,
    OneNotInIdeal,
    EnumerationBudgetExceeded,
    BranchUndetermined,
    PrecisionInsufficient,
    SearchBudgetExceeded,
    NotTotallyReal,
    InputError,
};

std::string_view to_string(ErrorCode code);

/// Library-wide exception. Every failure carries a machine-readable code so
/// the CLI can map it onto an exit status.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

inline std::string_view to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::NotSquarefree: return "NotSquarefree";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::Singular: return "Singular";
    case ErrorCode::NotAnIdeal: return "NotAnIdeal";
    case ErrorCode::OneNotInIdeal: return "OneNotInIdeal";
    case ErrorCode::EnumerationBudgetExceeded: return "EnumerationBudgetExceeded";
    case ErrorCode::BranchUndetermined: return "BranchUndetermined";
    case ErrorCode::PrecisionInsufficient: return "PrecisionInsufficient";
    case ErrorCode::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case ErrorCode::NotTotallyReal: return "NotTotallyReal";
    case ErrorCode::InputError: return "InputError";
    }
    return "Unknown";
}

} // namespace arak
