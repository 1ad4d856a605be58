#include "actr/error.hpp"

namespace actr {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::DuplicateType: return "DuplicateType";
        case ErrorCode::DuplicateSlot: return "DuplicateSlot";
        case ErrorCode::UnknownType: return "UnknownType";
        case ErrorCode::UnknownSlot: return "UnknownSlot";
        case ErrorCode::DuplicateChunkName: return "DuplicateChunkName";
        case ErrorCode::UnknownChunk: return "UnknownChunk";
        case ErrorCode::DuplicateBuffer: return "DuplicateBuffer";
        case ErrorCode::UnknownBuffer: return "UnknownBuffer";
        case ErrorCode::EmptyBuffer: return "EmptyBuffer";
        case ErrorCode::TypeMismatch: return "TypeMismatch";
        case ErrorCode::UnboundVariable: return "UnboundVariable";
        case ErrorCode::SyntaxError: return "SyntaxError";
        case ErrorCode::Unsupported: return "Unsupported";
        case ErrorCode::DuplicateRuleName: return "DuplicateRuleName";
        case ErrorCode::DuplicateBufferTest: return "DuplicateBufferTest";
        case ErrorCode::UnboundRhsVariable: return "UnboundRhsVariable";
        case ErrorCode::UnknownAnnotationTarget: return "UnknownAnnotationTarget";
        case ErrorCode::TimeInPast: return "TimeInPast";
        case ErrorCode::ProviderExhausted: return "ProviderExhausted";
        case ErrorCode::UnknownProvider: return "UnknownProvider";
        case ErrorCode::MalformedMove: return "MalformedMove";
        case ErrorCode::WrongLength: return "WrongLength";
        case ErrorCode::EmptyResults: return "EmptyResults";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Error";
}

}  // namespace actr
