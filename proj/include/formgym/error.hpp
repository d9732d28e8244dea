#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace formgym {

enum class ErrorCode {
    MalformedDocument,
    InvariantViolation,
    ViewportTooSmall,
    InconsistentState,
    SchemaSampleMismatch,
    SessionTerminated,
    GeneratorUnavailable,
    MissingField,
    InvalidFieldValue,
    MisalignedHistory,
    UnknownField,
    UnfillableField,
    ModelUnavailable,
    UnknownForm,
    UnknownSample,
    UnknownSession,
    Expired,
    AlreadySubmitted,
    NotSubmitted,
    StepCapExceeded,
    InvalidArgument,
    Io,
};

std::string_view error_code_name(ErrorCode code);

/// Base exception for everything the library raises. `code()` identifies the
/// failure class so callers (the HTTP layer in particular) can map it without
/// parsing messages.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace formgym
