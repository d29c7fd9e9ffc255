#pragma once

#include <stdexcept>
#include <string>

namespace mhat {

/// Machine-readable failure categories. Every thrown error carries one so the
/// CLI can map it onto its exit-code contract.
enum class ErrorCode {
    DivisionByZero,
    FieldMismatch,
    NoRoot,
    GroupMismatch,
    ParentMismatch,
    ArityMismatch,
    NotInvertible,
    UnsupportedPush,
    NotScalar,
    CounitNotOne,
    CoveringViolation,
    NoSolution,
    NoDual,
    NotCounimodular,
    LegExpansionUnavailable,
    ParseError,
    ConfigError,
    Internal,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, std::string message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
          code_(code) {}

    ErrorCode code() const { return code_; }

    /// Precondition refusals are distinct from failed checks and from bad
    /// input: the CLI reports them with exit code 3.
    bool is_precondition_refusal() const {
        return code_ == ErrorCode::NotCounimodular;
    }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

}  // namespace mhat
