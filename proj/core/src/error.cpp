#include "radial/error.hpp"

namespace radial {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::MalformedInput: return "MALFORMED-INPUT";
        case ErrorCode::DuplicateVertex: return "DUPLICATE-VERTEX";
        case ErrorCode::UnknownVertex: return "UNKNOWN-VERTEX";
        case ErrorCode::Loop: return "LOOP";
        case ErrorCode::TiesPresent: return "TIES-PRESENT";
        case ErrorCode::Degenerate: return "DEGENERATE";
        case ErrorCode::LengthMismatch: return "LENGTH-MISMATCH";
        case ErrorCode::NotACycle: return "NOT-A-CYCLE";
        case ErrorCode::InvalidArgument: return "INVALID-ARGUMENT";
        case ErrorCode::Internal: return "INTERNAL";
    }
    return "UNKNOWN";
}

namespace {

std::string compose(ErrorCode code, const std::string& message, const std::string& location) {
    std::string out(to_string(code));
    out += ": ";
    out += message;
    if (!location.empty()) out += " (at " + location + ")";
    return out;
}

}  // namespace

Error::Error(ErrorCode code, const std::string& message, std::string location)
    : std::runtime_error(compose(code, message, location)), code_(code), message_(message), location_(std::move(location)) {}

}  // namespace radial
