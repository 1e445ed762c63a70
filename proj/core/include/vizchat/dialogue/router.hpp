#pragma once

#include <cstddef>
#include <future>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vizchat/dialogue/backend.hpp"
#include "vizchat/dialogue/intent.hpp"
#include "vizchat/dialogue/mock_backend.hpp"
#include "vizchat/dialogue/prompts.hpp"
#include "vizchat/dialogue/transform.hpp"
#include "vizchat/error.hpp"
#include "vizchat/narrative/narration.hpp"
#include "vizchat/narrative/scene.hpp"
#include "vizchat/scene/scene_tree.hpp"
#include "vizchat/visual/session_state.hpp"

namespace vizchat {

/// One backend per bot role. The two encyclopedia roles may share a backend.
using BotBackends = std::map<BotRole, std::shared_ptr<BotBackend>>;

BotBackends make_mock_backends(const MockOptions& options = {});

// Single-bot operations. Each sends `query` as the only user message.

/// Throws Error(kBackendUnavailable) or Error(kUnparseableReply).
Intent classify_intent(std::string_view query, BotBackend& backend, const std::string& system_prompt);

/// A query naming a structure of `tree` is node navigation to the deepest one
/// named, whatever digit the bot replied. Throws Error(kUnresolvedTarget) for
/// navigation without a resolvable target, Error(kUnparseableReply).
PilotIntent classify_pilot(std::string_view query, const SceneTree& tree, BotBackend& backend,
                           const std::string& system_prompt);
PilotIntent interpret_pilot_reply(std::string_view reply, std::string_view query, const SceneTree& tree);

/// Throws Error(kMalformedTransform) or Error(kNonPositiveZoom).
Transform extract_transform(std::string_view query, BotBackend& backend, const std::string& system_prompt);

std::string guardian_reply(std::string_view query, BotBackend& backend, const std::string& system_prompt);

struct EncyclopediaAnswer {
  std::string concise;
  std::string detailed;  // empty until the user asks for more
  bool awaiting_detail = false;
};

/// Conversation-level replies recognised before any bot is asked.
enum class ControlKind { kNone, kHelp, kAffirmDetail, kDeclineDetail, kStopExploration, kMoreOptions };

struct RoutingContext {
  std::shared_ptr<const SceneTree> tree;
  bool awaiting_detail = false;
  bool exploring = false;
};

RoutingContext context_of(const SessionState& session);
ControlKind detect_control(std::string_view query, const RoutingContext& context);

struct RouteFailure {
  ErrorCode code;
  std::string message;
};

/// Outcome of the bot round for one query. Only the reply of the bot the
/// Manager selected is kept.
struct RoutedQuery {
  std::string query;
  ControlKind control = ControlKind::kNone;
  std::optional<Intent> intent;
  std::optional<PilotIntent> pilot;
  std::optional<Transform> transform;
  std::string reply;  // Encyclopedia concise segment or Guardian text
  std::optional<std::shared_future<std::string>> detailed;
  std::optional<RouteFailure> failure;
};

struct QueryResult {
  std::optional<Intent> intent;
  std::optional<PilotIntent> pilot;
  std::optional<Transform> transform;
  std::string narration;
  std::vector<Scene> scenes;
  std::vector<NodeId> options;
  bool awaiting_detail = false;
  bool help = false;
  std::optional<ErrorCode> error;
};

/// Pack-of-bots query pipeline.
///
/// route() sends the query to every bot at once, waits for the Manager's
/// class and then only for the selected bot; the other replies are dropped
/// unread. apply() turns the routed reply into visual actions, scenes and
/// narration on one session. The split lets a caller hold a session lock
/// only around apply().
class DialogueRouter {
 public:
  DialogueRouter(BotBackends backends, PromptSet prompts, NarrationTemplates narration,
                 std::size_t worker_threads = 16);
  ~DialogueRouter();

  DialogueRouter(const DialogueRouter&) = delete;
  DialogueRouter& operator=(const DialogueRouter&) = delete;

  RoutedQuery route(std::string_view query, const RoutingContext& context) const;
  QueryResult apply(const RoutedQuery& routed, SessionState& session) const;
  QueryResult process_query(std::string_view query, SessionState& session) const;

  /// Picks exploration option `index` (zero-based) and offers the next ones.
  QueryResult select_option(std::size_t index, SessionState& session) const;

  /// Concise and detailed segments requested together; returns once the
  /// concise one is in.
  EncyclopediaAnswer encyclopedia_query(std::string_view query, const SceneTree& tree,
                                        std::shared_future<std::string>* detailed = nullptr) const;

  /// Introduction narration for a new session.
  std::string introduction(SessionState& session) const;

  PromptContext prompt_context(const SceneTree& tree) const;
  const PromptSet& prompts() const noexcept;
  const NarrationTemplates& narration() const noexcept;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace vizchat
