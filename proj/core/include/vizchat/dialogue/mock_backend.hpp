#pragma once

#include <chrono>
#include <filesystem>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "vizchat/dialogue/backend.hpp"
#include "vizchat/dialogue/prompts.hpp"

namespace vizchat {

struct CannedAnswer {
  std::string concise;
  std::string detailed;
};

/// Question → answer, keyed by normalize_question().
using CannedAnswers = std::map<std::string, CannedAnswer, std::less<>>;

CannedAnswers load_canned_answers(const std::filesystem::path& path);

/// Lowercase, trimmed, trailing punctuation removed.
std::string normalize_question(std::string_view question);

struct MockOptions {
  std::chrono::milliseconds delay{0};
  CannedAnswers canned;
};

/// Deterministic stand-in for a prompted bot.
///
/// Reads the "Current model:" and "Known structures:" lines of the rendered
/// system prompt, as a prompted model would, and answers the last user
/// message with ordered keyword rules:
///
///   manager       cutting-plane words → CuttingPlane; view words → Explorer;
///                 navigation verbs → Pilot; questions about the model's
///                 structures or domain → Encyclopedia; a bare structure name
///                 → Pilot; anything else → Guardian.
///   pilot         structure mentioned → 1; start/reset → 3; level → 2;
///                 back/last/again → 4; otherwise 1.
///   explorer      "{zoom,yaw,pitch,roll}" from direction and distance words.
///   encyclopedia  canned answer for the question, else a fixed fallback.
///   guardian      a short refusal redirecting to the current model.
class MockBot : public BotBackend {
 public:
  explicit MockBot(BotRole role, MockOptions options = {});

  std::string complete(const std::string& system_prompt, const std::vector<ChatMessage>& messages) override;
  std::chrono::milliseconds budget() const override;

  BotRole role() const noexcept { return role_; }

 private:
  BotRole role_;
  MockOptions options_;
};

/// Backend whose replies come from a callback; for tests and demos.
class ScriptedBackend : public BotBackend {
 public:
  using Handler = std::function<std::string(const std::string& system_prompt,
                                            const std::vector<ChatMessage>& messages)>;

  explicit ScriptedBackend(Handler handler, std::chrono::milliseconds delay = std::chrono::milliseconds{0},
                           std::chrono::milliseconds budget = std::chrono::seconds{2});

  std::string complete(const std::string& system_prompt, const std::vector<ChatMessage>& messages) override;
  std::chrono::milliseconds budget() const override { return budget_; }

 private:
  Handler handler_;
  std::chrono::milliseconds delay_;
  std::chrono::milliseconds budget_;
};

}  // namespace vizchat
