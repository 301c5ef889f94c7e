#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace longcycle {

enum class ErrorCode {
    // rotation tables and embeddings
    InvalidRotation,
    AsymmetricRotation,
    Disconnected,
    NotPlanarEmbedding,
    // cycles
    NotACycle,
    UnknownVertex,
    PreconditionViolated,
    // (B,C)-graph and replacements
    NotACEdgeOfFace,
    CycleTooShort,
    StaleInstance,
    // engine
    InitialCycleInvalid,
    CycleTooShortAtFixpoint,
    NoInitialCycleFound,
    NotEssentially4Connected,
    // oracle
    TooLarge,
    BudgetExceeded,
    // instances and file formats
    UnknownName,
    SyntaxError,
    InvariantViolation,
    GenerationInvalid,
    // a broken internal invariant; always a bug
    InternalError,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

}  // namespace longcycle
