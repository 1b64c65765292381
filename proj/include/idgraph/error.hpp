#pragma once

#include <stdexcept>
#include <string>

namespace idgraph {

enum class ErrorCode {
    InvalidVertex,
    Disconnected,
    DegenerateInterval,
    DuplicateIndex,
    MalformedCotree,
    NotCograph,
    TwinsPresent,
    OpenTwinsPresent,
    CapExceeded,
    NotValidated,
    UnsupportedCombination,
    MissingDiameter,
    VerifierFailed,
    KTooSmall,
    BadParameter,
    Unreachable,
    ClassMismatch,
    IsolatedVertex,
    Parse,
};

const char* error_name(ErrorCode c);

// Single exception type; the code drives CLI exit status.
class Error : public std::runtime_error {
public:
    Error(ErrorCode c, const std::string& msg) : std::runtime_error(msg), code_(c) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

}  // namespace idgraph
