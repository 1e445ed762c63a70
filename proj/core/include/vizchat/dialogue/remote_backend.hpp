#pragma once

#include <chrono>
#include <string>
#include <vector>

#include "vizchat/dialogue/backend.hpp"

namespace vizchat {

struct RemoteBackendOptions {
  /// e.g. "https://api.openai.com/v1"; "/chat/completions" is appended.
  std::string base_url;
  std::string model;
  std::string api_key;
  std::chrono::milliseconds timeout{30'000};
  int max_retries = 1;
  std::chrono::milliseconds initial_backoff{250};
  double temperature = 0.0;
};

/// Chat-completions client. Connection errors, 429 and 5xx are retried with
/// exponential backoff; anything else fails the call immediately.
class RemoteBackend : public BotBackend {
 public:
  explicit RemoteBackend(RemoteBackendOptions options);

  std::string complete(const std::string& system_prompt, const std::vector<ChatMessage>& messages) override;
  std::chrono::milliseconds budget() const override;

  const RemoteBackendOptions& options() const noexcept { return options_; }

 private:
  RemoteBackendOptions options_;
  std::string origin_;  // scheme://host[:port]
  std::string path_;    // base path + /chat/completions
};

}  // namespace vizchat
