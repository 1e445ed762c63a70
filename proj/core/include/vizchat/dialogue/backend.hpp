#pragma once

#include <chrono>
#include <string>
#include <string_view>
#include <vector>

namespace vizchat {

struct ChatMessage {
  std::string role;  // "user" | "assistant"
  std::string content;
};

/// A completion provider behind one bot. Implementations must be safe to call
/// from several threads at once and must throw Error(kBackendUnavailable)
/// rather than return made-up text when they fail.
class BotBackend {
 public:
  virtual ~BotBackend() = default;

  virtual std::string complete(const std::string& system_prompt,
                               const std::vector<ChatMessage>& messages) = 0;

  /// Wall-clock budget the router grants one call before giving up on it.
  virtual std::chrono::milliseconds budget() const = 0;
};

}  // namespace vizchat
