#pragma once

#include <cstddef>
#include <deque>
#include <optional>

#include "vizchat/narrative/scene.hpp"

namespace vizchat {

enum class CompletionSignal { kSpeechDone, kAnimationDone };

struct TimelineAdvance {
  /// The scene that just completed, if this signal completed it.
  std::optional<Scene> finished;
  /// The scene that became current as a result.
  std::optional<Scene> next;
};

/// FIFO queue of scenes. A scene becomes current when started and leaves only
/// once both its speech and its animation have reported completion.
class Timeline {
 public:
  void enqueue(Scene scene);

  /// Promotes the front of the queue when nothing is playing.
  bool start_next();

  /// Marks the signal on the current scene and, once both are set, promotes
  /// the next scene. Throws Error(kSignalWithoutScene) when idle.
  TimelineAdvance advance(CompletionSignal signal);

  const std::optional<Scene>& current() const noexcept { return current_; }
  Scene* current_mut() noexcept { return current_ ? &*current_ : nullptr; }
  const std::deque<Scene>& pending() const noexcept { return queue_; }
  std::size_t size() const noexcept { return queue_.size(); }
  bool idle() const noexcept { return !current_; }

  void clear() noexcept;

 private:
  std::deque<Scene> queue_;
  std::optional<Scene> current_;
};

Scene add_to_timeline(Timeline& timeline, const NodeId& node, const SceneTree& tree,
                      const CameraState& camera, std::optional<std::string> speech = std::nullopt);

}  // namespace vizchat
