#include "formgym/error.hpp"

namespace formgym {

std::string_view error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::MalformedDocument: return "MalformedDocument";
        case ErrorCode::InvariantViolation: return "InvariantViolation";
        case ErrorCode::ViewportTooSmall: return "ViewportTooSmall";
        case ErrorCode::InconsistentState: return "InconsistentState";
        case ErrorCode::SchemaSampleMismatch: return "SchemaSampleMismatch";
        case ErrorCode::SessionTerminated: return "SessionTerminated";
        case ErrorCode::GeneratorUnavailable: return "GeneratorUnavailable";
        case ErrorCode::MissingField: return "MissingField";
        case ErrorCode::InvalidFieldValue: return "InvalidFieldValue";
        case ErrorCode::MisalignedHistory: return "MisalignedHistory";
        case ErrorCode::UnknownField: return "UnknownField";
        case ErrorCode::UnfillableField: return "UnfillableField";
        case ErrorCode::ModelUnavailable: return "ModelUnavailable";
        case ErrorCode::UnknownForm: return "UnknownForm";
        case ErrorCode::UnknownSample: return "UnknownSample";
        case ErrorCode::UnknownSession: return "UnknownSession";
        case ErrorCode::Expired: return "Expired";
        case ErrorCode::AlreadySubmitted: return "AlreadySubmitted";
        case ErrorCode::NotSubmitted: return "NotSubmitted";
        case ErrorCode::StepCapExceeded: return "StepCapExceeded";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::Io: return "Io";
    }
    return "Unknown";
}

}  // namespace formgym
