#include "vat/error.hpp"

namespace vat {

std::string_view to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::BadVertexId: return "BadVertexId";
    case ErrorCode::NonPositiveWeight: return "NonPositiveWeight";
    case ErrorCode::EmptyRemainder: return "EmptyRemainder";
    case ErrorCode::BadParameter: return "BadParameter";
    case ErrorCode::RetryLimitExceeded: return "RetryLimitExceeded";
    case ErrorCode::EmptySet: return "EmptySet";
    case ErrorCode::FullSet: return "FullSet";
    case ErrorCode::DisconnectedInput: return "DisconnectedInput";
    case ErrorCode::TrivialGraph: return "TrivialGraph";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::VolumeTooLarge: return "VolumeTooLarge";
    case ErrorCode::IsolatedVertex: return "IsolatedVertex";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::NotRegular: return "NotRegular";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
    }
    return "Unknown";
}

} // namespace vat
