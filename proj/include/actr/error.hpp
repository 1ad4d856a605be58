#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace actr {

enum class ErrorCode {
    DuplicateType,
    DuplicateSlot,
    UnknownType,
    UnknownSlot,
    DuplicateChunkName,
    UnknownChunk,
    DuplicateBuffer,
    UnknownBuffer,
    EmptyBuffer,
    TypeMismatch,
    UnboundVariable,
    SyntaxError,
    Unsupported,
    DuplicateRuleName,
    DuplicateBufferTest,
    UnboundRhsVariable,
    UnknownAnnotationTarget,
    TimeInPast,
    ProviderExhausted,
    UnknownProvider,
    MalformedMove,
    WrongLength,
    EmptyResults,
    InvalidArgument,
};

std::string_view to_string(ErrorCode code);

// Single exception type for the library; callers branch on code().
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace actr
