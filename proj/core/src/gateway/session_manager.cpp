#include "vizchat/gateway/session_manager.hpp"

#include <atomic>
#include <deque>
#include <mutex>
#include <random>

#include <nlohmann/json.hpp>

#include "../detail/text.hpp"
#include "vizchat/gateway/snapshot.hpp"

namespace vizchat {
namespace {

constexpr double kTimeEpsilon = 1e-9;

std::string random_session_id() {
  static thread_local std::mt19937_64 rng{std::random_device{}()};
  static constexpr char kHex[] = "0123456789abcdef";
  std::string id(16, '0');
  std::uint64_t bits = rng();
  for (char& c : id) {
    c = kHex[bits & 0xF];
    bits >>= 4;
  }
  return id;
}

}  // namespace

double speech_duration(std::string_view text, double words_per_second) {
  return static_cast<double>(detail::word_count(text)) / words_per_second;
}

struct SessionManager::Session {
  Session(std::shared_ptr<const SceneTree> tree, std::uint64_t seed) : state(std::move(tree), seed) {}

  mutable std::mutex mutex;
  SessionState state;
  std::atomic<bool> in_flight{false};
  std::uint64_t speech_scene = 0;
  double speech_elapsed = 0.0;
  std::atomic<std::chrono::steady_clock::rep> last_active{0};
  std::deque<SpeechEvent> speech_log;

  void log_speech(SpeechEvent::Direction direction, std::string text, double rate) {
    if (text.empty()) return;
    const double estimate = speech_duration(text, rate);
    speech_log.push_back({direction, std::move(text), estimate});
    while (speech_log.size() > kSpeechLogCap) speech_log.pop_front();
  }

  void touch() { last_active = std::chrono::steady_clock::now().time_since_epoch().count(); }
};

namespace {

class InFlight {
 public:
  explicit InFlight(std::atomic<bool>& flag) : flag_(flag) {
    if (flag_.exchange(true)) throw Error(ErrorCode::kBusy, "a query is already being processed");
  }
  ~InFlight() { flag_ = false; }
  InFlight(const InFlight&) = delete;
  InFlight& operator=(const InFlight&) = delete;

 private:
  std::atomic<bool>& flag_;
};

}  // namespace

SessionManager::SessionManager(ModelRegistry models, std::shared_ptr<const DialogueRouter> router,
                               SessionOptions options)
    : models_(std::move(models)), router_(std::move(router)), options_(options) {}

SessionManager::~SessionManager() { stop_ticker(); }

std::vector<std::string> SessionManager::model_keys() const {
  std::vector<std::string> keys;
  for (const auto& [key, tree] : models_) keys.push_back(key);
  return keys;
}

std::string SessionManager::create_session(std::string_view model) {
  auto it = models_.find(model);
  if (it == models_.end()) throw Error(ErrorCode::kUnknownModel, "unknown model '" + std::string(model) + "'");

  std::unique_lock lock(sessions_mutex_);
  const std::uint64_t seed = options_.seed + created_++;
  auto session = std::make_shared<Session>(it->second, seed);
  session->touch();
  {
    std::lock_guard session_lock(session->mutex);
    SessionState& state = session->state;
    std::string intro = router_->introduction(state);
    state.conversation().push_back({"system", intro});
    session->log_speech(SpeechEvent::Direction::kOut, intro, options_.spoken_rate);
    state.enqueue(build_scene(SceneKind::kSpeechOnly, std::nullopt, state.tree(), state.view().camera,
                              std::move(intro)));
  }
  std::string id = random_session_id();
  while (sessions_.contains(id)) id = random_session_id();
  sessions_.emplace(id, std::move(session));
  return id;
}

bool SessionManager::close_session(std::string_view id) {
  std::unique_lock lock(sessions_mutex_);
  return sessions_.erase(std::string(id)) > 0;
}

bool SessionManager::has_session(std::string_view id) const {
  std::shared_lock lock(sessions_mutex_);
  return sessions_.contains(std::string(id));
}

std::size_t SessionManager::session_count() const {
  std::shared_lock lock(sessions_mutex_);
  return sessions_.size();
}

std::shared_ptr<SessionManager::Session> SessionManager::find(std::string_view id) const {
  std::shared_lock lock(sessions_mutex_);
  auto it = sessions_.find(std::string(id));
  if (it == sessions_.end()) throw Error(ErrorCode::kUnknownSession, "unknown session '" + std::string(id) + "'");
  return it->second;
}

QueryResult SessionManager::post_query(std::string_view id, std::string_view text) {
  auto session = find(id);
  session->touch();
  InFlight guard(session->in_flight);

  RoutingContext context;
  {
    std::lock_guard lock(session->mutex);
    context = context_of(session->state);
  }
  RoutedQuery routed = router_->route(text, context);
  std::lock_guard lock(session->mutex);
  session->log_speech(SpeechEvent::Direction::kIn, std::string(text), options_.spoken_rate);
  QueryResult result = router_->apply(routed, session->state);
  session->log_speech(SpeechEvent::Direction::kOut, result.narration, options_.spoken_rate);
  return result;
}

QueryResult SessionManager::post_selection(std::string_view id, std::size_t index) {
  auto session = find(id);
  session->touch();
  InFlight guard(session->in_flight);
  std::lock_guard lock(session->mutex);
  QueryResult result = router_->select_option(index, session->state);
  session->log_speech(SpeechEvent::Direction::kOut, result.narration, options_.spoken_rate);
  return result;
}

nlohmann::json SessionManager::get_state(std::string_view id) const {
  auto session = find(id);
  session->touch();
  std::lock_guard lock(session->mutex);
  nlohmann::json document = snapshot(session->state, id);
  if (const auto& current = session->state.timeline().current()) {
    document["scene"]["speech_estimate"] = speech_duration(current->speech, options_.spoken_rate);
  }
  return document;
}

std::vector<SpeechEvent> SessionManager::speech_events(std::string_view id) const {
  auto session = find(id);
  std::lock_guard lock(session->mutex);
  return {session->speech_log.begin(), session->speech_log.end()};
}

bool SessionManager::speech_complete(std::string_view id) {
  auto session = find(id);
  session->touch();
  std::lock_guard lock(session->mutex);
  const auto& current = session->state.timeline().current();
  if (!current || current->speech_done) return false;
  session->state.signal(CompletionSignal::kSpeechDone);
  return true;
}

void SessionManager::advance_speech(Session& session, double dt) {
  SessionState& state = session.state;
  if (state.scenes_started() != session.speech_scene) {
    session.speech_scene = state.scenes_started();
    session.speech_elapsed = 0.0;
  }
  const auto& current = state.timeline().current();
  if (!current || current->speech_done) return;
  session.speech_elapsed += dt;
  if (session.speech_elapsed + kTimeEpsilon >= speech_duration(current->speech, options_.spoken_rate)) {
    state.signal(CompletionSignal::kSpeechDone);
  }
}

void SessionManager::tick(std::string_view id, double dt) {
  auto session = find(id);
  std::lock_guard lock(session->mutex);
  session->state.tick(dt);
  advance_speech(*session, dt);
}

void SessionManager::tick_all(double dt) {
  std::vector<std::shared_ptr<Session>> live;
  {
    std::shared_lock lock(sessions_mutex_);
    for (const auto& [id, session] : sessions_) live.push_back(session);
  }
  for (const auto& session : live) {
    std::lock_guard lock(session->mutex);
    session->state.tick(dt);
    advance_speech(*session, dt);
  }
}

std::size_t SessionManager::reap_idle(std::chrono::steady_clock::time_point now) {
  const auto cutoff = (now - options_.idle_timeout).time_since_epoch().count();
  std::unique_lock lock(sessions_mutex_);
  return std::erase_if(sessions_, [cutoff](const auto& entry) {
    return !entry.second->in_flight && entry.second->last_active.load() < cutoff;
  });
}

void SessionManager::start_ticker(double hz) {
  stop_ticker();
  const auto period = std::chrono::duration_cast<std::chrono::steady_clock::duration>(
      std::chrono::duration<double>(1.0 / hz));
  ticker_ = std::jthread([this, period](std::stop_token stop) {
    auto last = std::chrono::steady_clock::now();
    auto next_reap = last + std::chrono::seconds{1};
    while (!stop.stop_requested()) {
      std::this_thread::sleep_until(last + period);
      const auto now = std::chrono::steady_clock::now();
      tick_all(std::chrono::duration<double>(now - last).count());
      last = now;
      if (now >= next_reap) {
        reap_idle(now);
        next_reap = now + std::chrono::seconds{1};
      }
    }
  });
}

void SessionManager::stop_ticker() {
  if (ticker_.joinable()) {
    ticker_.request_stop();
    ticker_.join();
  }
}

void SessionManager::inspect(std::string_view id, const std::function<void(const SessionState&)>& fn) const {
  auto session = find(id);
  std::lock_guard lock(session->mutex);
  fn(session->state);
}

}  // namespace vizchat
