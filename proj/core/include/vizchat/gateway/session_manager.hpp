#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <thread>
#include <unordered_map>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "vizchat/dialogue/router.hpp"
#include "vizchat/gateway/config.hpp"
#include "vizchat/visual/session_state.hpp"

namespace vizchat {

struct SessionOptions {
  double spoken_rate = 2.5;  // words per second
  std::chrono::seconds idle_timeout{1800};
  std::uint64_t seed = 0;
};

/// Seconds the speech timer allows for `text` at `words_per_second`.
double speech_duration(std::string_view text, double words_per_second);

/// Text heard from the user (kIn) or spoken to them (kOut), for speech
/// provider adapters.
struct SpeechEvent {
  enum class Direction { kIn, kOut };
  Direction direction = Direction::kOut;
  std::string text;
  double duration_estimate = 0.0;  // seconds
};

inline constexpr std::size_t kSpeechLogCap = 64;

/// Owns every live session and serializes access to each one.
///
/// Queries on different sessions run in parallel. A second query on a session
/// whose previous query is still routing fails with Error(kBusy). Bot replies
/// are awaited without holding the session lock; only applying them does.
class SessionManager {
 public:
  SessionManager(ModelRegistry models, std::shared_ptr<const DialogueRouter> router, SessionOptions options = {});
  ~SessionManager();

  SessionManager(const SessionManager&) = delete;
  SessionManager& operator=(const SessionManager&) = delete;

  std::vector<std::string> model_keys() const;

  /// New session on `model` with its introduction queued. Throws Error(kUnknownModel).
  std::string create_session(std::string_view model);
  bool close_session(std::string_view id);
  bool has_session(std::string_view id) const;
  std::size_t session_count() const;

  /// Throws Error(kUnknownSession) or Error(kBusy).
  QueryResult post_query(std::string_view id, std::string_view text);
  /// `index` is zero-based. Throws Error(kNoPendingOptions) or Error(kIndexOutOfRange).
  QueryResult post_selection(std::string_view id, std::size_t index);
  nlohmann::json get_state(std::string_view id) const;

  /// The renderer finished speaking the current scene. Returns false when
  /// nothing was waiting on speech.
  bool speech_complete(std::string_view id);

  /// Most recent speech events of the session, oldest first.
  std::vector<SpeechEvent> speech_events(std::string_view id) const;

  /// Advances animations and speech timers by `dt` seconds.
  void tick(std::string_view id, double dt);
  void tick_all(double dt);

  /// Drops sessions idle for longer than the configured timeout.
  std::size_t reap_idle(std::chrono::steady_clock::time_point now = std::chrono::steady_clock::now());

  /// Runs tick_all and reap_idle on a background thread at `hz`.
  void start_ticker(double hz);
  void stop_ticker();

  /// Runs `fn` on the session under its lock.
  void inspect(std::string_view id, const std::function<void(const SessionState&)>& fn) const;

  const DialogueRouter& router() const noexcept { return *router_; }

 private:
  struct Session;

  std::shared_ptr<Session> find(std::string_view id) const;
  void advance_speech(Session& session, double dt);

  ModelRegistry models_;
  std::shared_ptr<const DialogueRouter> router_;
  SessionOptions options_;
  mutable std::shared_mutex sessions_mutex_;
  std::unordered_map<std::string, std::shared_ptr<Session>> sessions_;
  std::uint64_t created_ = 0;
  std::jthread ticker_;
};

}  // namespace vizchat
