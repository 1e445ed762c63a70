#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace vizchat {

enum class ErrorCode {
  // scene model
  kParseError,
  kValidationError,
  kUnknownNode,
  // narrative engine
  kNoInstances,
  kSignalWithoutScene,
  kUnknownTaskType,
  // dialogue router
  kBackendUnavailable,
  kUnparseableReply,
  kUnresolvedTarget,
  kMalformedTransform,
  kNonPositiveZoom,
  // visual state
  kAtRoot,
  kNoChildren,
  kEmptyHistory,
  // gateway
  kUnknownModel,
  kUnknownSession,
  kBusy,
  kNoPendingOptions,
  kIndexOutOfRange,
  kBadRequest,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace vizchat
