#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace orbitq {

enum class ErrorCode {
    IllegalRank,
    EmptyWindow,
    NotAdmissible,
    NotFree,
    InfiniteQuotient,
    WrongKind,
    DiagramMismatch,
    NotReducible,
    IllegalToken,
    ParseError,
    WindowTooNarrow,
    VertexNotInQuotient,
    BadParams,
    UnknownFixture,
    TorsionWithoutFixedVertex,
    NotAutomorphism,
    Internal,
};

constexpr std::string_view to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::IllegalRank: return "IllegalRank";
    case ErrorCode::EmptyWindow: return "EmptyWindow";
    case ErrorCode::NotAdmissible: return "NotAdmissible";
    case ErrorCode::NotFree: return "NotFree";
    case ErrorCode::InfiniteQuotient: return "InfiniteQuotient";
    case ErrorCode::WrongKind: return "WrongKind";
    case ErrorCode::DiagramMismatch: return "DiagramMismatch";
    case ErrorCode::NotReducible: return "NotReducible";
    case ErrorCode::IllegalToken: return "IllegalToken";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::WindowTooNarrow: return "WindowTooNarrow";
    case ErrorCode::VertexNotInQuotient: return "VertexNotInQuotient";
    case ErrorCode::BadParams: return "BadParams";
    case ErrorCode::UnknownFixture: return "UnknownFixture";
    case ErrorCode::TorsionWithoutFixedVertex: return "TorsionWithoutFixedVertex";
    case ErrorCode::NotAutomorphism: return "NotAutomorphism";
    case ErrorCode::Internal: return "Internal";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

// Internal consistency checks that must never fire on valid input.
inline void ensure(bool condition, const std::string& what) {
    if (!condition) throw Error(ErrorCode::Internal, what);
}

} // namespace orbitq
