#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace radial {

enum class ErrorCode {
    MalformedInput,
    DuplicateVertex,
    UnknownVertex,
    Loop,
    TiesPresent,
    Degenerate,
    LengthMismatch,
    NotACycle,
    InvalidArgument,
    Internal,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library. `location` names the offending input
/// element (a JSON pointer for parse errors, an edge or pair label otherwise).
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message, std::string location = {});

    ErrorCode code() const { return code_; }
    const std::string& location() const { return location_; }
    /// The message without code prefix and location suffix.
    const std::string& message() const { return message_; }

private:
    ErrorCode code_;
    std::string message_;
    std::string location_;
};

}  // namespace radial
