#pragma once

#include <cstddef>
#include <cstdint>
#include <deque>
#include <future>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "vizchat/dialogue/transform.hpp"
#include "vizchat/narrative/exploration.hpp"
#include "vizchat/narrative/timeline.hpp"
#include "vizchat/scene/scene_tree.hpp"
#include "vizchat/visual/animation.hpp"
#include "vizchat/visual/camera.hpp"

namespace vizchat {

inline constexpr std::size_t kHistoryCap = 64;

/// Committed visual state; one entry of the navigation history.
struct ViewState {
  CameraState camera;
  CuttingPlaneState plane;
  NodeId current_node;
  int scale_level = 0;
  std::vector<NodeId> highlights;

  friend bool operator==(const ViewState&, const ViewState&) = default;
};

struct ConversationEntry {
  std::string speaker;
  std::string text;
};

/// New camera after orbiting/zooming by `t`, plus the animation getting there.
/// distance /= zoom_factor; angles are added. Throws Error(kNonPositiveZoom).
std::pair<CameraState, AnimationSpec> apply_transform(const CameraState& camera, const Transform& t);

/// Headless visualization state of one session.
///
/// Visual operations commit the target view immediately and return the
/// animation that leads there; the displayed pose follows the animation of
/// the timeline's current scene as `tick` advances it. Single writer: callers
/// serialize access.
class SessionState {
 public:
  explicit SessionState(std::shared_ptr<const SceneTree> tree, std::uint64_t narration_seed = 0);

  static ViewState default_view(const SceneTree& tree);

  const SceneTree& tree() const noexcept { return *tree_; }
  const std::shared_ptr<const SceneTree>& tree_ptr() const noexcept { return tree_; }

  const ViewState& view() const noexcept { return view_; }
  const std::deque<ViewState>& history() const noexcept { return history_; }
  const Timeline& timeline() const noexcept { return timeline_; }
  ExplorationPlan& exploration() noexcept { return exploration_; }
  const ExplorationPlan& exploration() const noexcept { return exploration_; }
  std::vector<ConversationEntry>& conversation() noexcept { return conversation_; }
  const std::vector<ConversationEntry>& conversation() const noexcept { return conversation_; }

  /// Pose currently on screen, which lags view() while an animation plays.
  Pose displayed_pose() const;
  bool animating() const noexcept { return player_ && !player_->finished(); }
  /// Count of scenes that have started playing; changes whenever the current scene does.
  std::uint64_t scenes_started() const noexcept { return scenes_started_; }

  AnimationSpec explore(const Transform& t);
  /// Frames the node's bounding sphere at framing_distance(radius).
  AnimationSpec fly_to(const NodeId& node);
  /// Throws Error(kAtRoot) or Error(kNoChildren).
  AnimationSpec change_scale(ScaleDirection direction);
  AnimationSpec reset();
  /// Throws Error(kEmptyHistory).
  AnimationSpec return_back();
  AnimationSpec set_cutting_plane();

  /// Advances the current scene's animation; emits kAnimationDone once when it
  /// ends and forwards it to the timeline.
  std::vector<CompletionSignal> tick(double dt);

  /// Appends to the timeline and starts it when idle.
  void enqueue(Scene scene);
  /// Drops everything queued or playing and starts `scene` now.
  void interrupt(Scene scene);
  /// Forwards a completion signal, starting whatever comes next.
  TimelineAdvance signal(CompletionSignal signal);

  void set_exploration(ExplorationPlan plan) { exploration_ = std::move(plan); }

  /// Replaces the timeline with an exploration of `answer` and returns the
  /// opening scene.
  Scene begin_exploration(std::string_view question, std::string_view answer);
  /// Appends the chosen option's scene. See ExplorationPlan::select.
  Scene select_option(std::size_t index, std::optional<std::string> speech = std::nullopt);
  const std::vector<NodeId>& skip_options() { return exploration_.skip(); }
  void end_exploration() noexcept { exploration_.finish(); }

  bool awaiting_detail() const noexcept { return pending_detail_.has_value(); }
  void set_pending_detail(std::shared_future<std::string> detail) { pending_detail_ = std::move(detail); }
  const std::optional<std::shared_future<std::string>>& pending_detail() const noexcept { return pending_detail_; }
  std::optional<std::shared_future<std::string>> take_pending_detail();

  /// Fresh seed for the next narration draw.
  std::uint64_t next_narration_seed() noexcept;

 private:
  void push_history();
  AnimationSpec animate_to(const ViewState& target, double duration) const;
  void start_current();

  std::shared_ptr<const SceneTree> tree_;
  ViewState view_;
  std::deque<ViewState> history_;
  Timeline timeline_;
  std::optional<AnimationPlayer> player_;
  Pose shown_;  // displayed pose while nothing animates
  ExplorationPlan exploration_;
  std::vector<ConversationEntry> conversation_;
  std::optional<std::shared_future<std::string>> pending_detail_;
  std::uint64_t narration_seed_;
  std::uint64_t narration_draws_ = 0;
  std::uint64_t scenes_started_ = 0;
};

}  // namespace vizchat
