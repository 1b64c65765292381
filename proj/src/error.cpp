#include "idgraph/error.hpp"

namespace idgraph {

const char* error_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::InvalidVertex: return "InvalidVertex";
        case ErrorCode::Disconnected: return "Disconnected";
        case ErrorCode::DegenerateInterval: return "DegenerateInterval";
        case ErrorCode::DuplicateIndex: return "DuplicateIndex";
        case ErrorCode::MalformedCotree: return "MalformedCotree";
        case ErrorCode::NotCograph: return "NotCograph";
        case ErrorCode::TwinsPresent: return "TwinsPresent";
        case ErrorCode::OpenTwinsPresent: return "OpenTwinsPresent";
        case ErrorCode::CapExceeded: return "CapExceeded";
        case ErrorCode::NotValidated: return "NotValidated";
        case ErrorCode::UnsupportedCombination: return "UnsupportedCombination";
        case ErrorCode::MissingDiameter: return "MissingDiameter";
        case ErrorCode::VerifierFailed: return "VerifierFailed";
        case ErrorCode::KTooSmall: return "KTooSmall";
        case ErrorCode::BadParameter: return "BadParameter";
        case ErrorCode::Unreachable: return "Unreachable";
        case ErrorCode::ClassMismatch: return "ClassMismatch";
        case ErrorCode::IsolatedVertex: return "IsolatedVertex";
        case ErrorCode::Parse: return "Parse";
    }
    return "Unknown";
}

}  // namespace idgraph
