#include "vizchat/error.hpp"

namespace vizchat {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kValidationError: return "ValidationError";
    case ErrorCode::kUnknownNode: return "UnknownNode";
    case ErrorCode::kNoInstances: return "NoInstances";
    case ErrorCode::kSignalWithoutScene: return "SignalWithoutScene";
    case ErrorCode::kUnknownTaskType: return "UnknownTaskType";
    case ErrorCode::kBackendUnavailable: return "BackendUnavailable";
    case ErrorCode::kUnparseableReply: return "UnparseableReply";
    case ErrorCode::kUnresolvedTarget: return "UnresolvedTarget";
    case ErrorCode::kMalformedTransform: return "MalformedTransform";
    case ErrorCode::kNonPositiveZoom: return "NonPositiveZoom";
    case ErrorCode::kAtRoot: return "AtRoot";
    case ErrorCode::kNoChildren: return "NoChildren";
    case ErrorCode::kEmptyHistory: return "EmptyHistory";
    case ErrorCode::kUnknownModel: return "UnknownModel";
    case ErrorCode::kUnknownSession: return "UnknownSession";
    case ErrorCode::kBusy: return "Busy";
    case ErrorCode::kNoPendingOptions: return "NoPendingOptions";
    case ErrorCode::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::kBadRequest: return "BadRequest";
  }
  return "Unknown";
}

}  // namespace vizchat
