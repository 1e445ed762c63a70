#include "vizchat/narrative/timeline.hpp"

#include "vizchat/error.hpp"

namespace vizchat {

void Timeline::enqueue(Scene scene) { queue_.push_back(std::move(scene)); }

bool Timeline::start_next() {
  if (current_ || queue_.empty()) return false;
  current_ = std::move(queue_.front());
  queue_.pop_front();
  return true;
}

TimelineAdvance Timeline::advance(CompletionSignal signal) {
  if (!current_) throw Error(ErrorCode::kSignalWithoutScene, "no scene is playing");
  switch (signal) {
    case CompletionSignal::kSpeechDone: current_->speech_done = true; break;
    case CompletionSignal::kAnimationDone: current_->animation_done = true; break;
  }

  TimelineAdvance result;
  if (!current_->complete()) return result;
  result.finished = std::move(current_);
  current_.reset();
  if (start_next()) result.next = *current_;
  return result;
}

void Timeline::clear() noexcept {
  queue_.clear();
  current_.reset();
}

Scene add_to_timeline(Timeline& timeline, const NodeId& node, const SceneTree& tree,
                      const CameraState& camera, std::optional<std::string> speech) {
  const SceneKind kind = tree.node(node).is_leaf() ? SceneKind::kFocus : SceneKind::kOverview;
  Scene scene = build_scene(kind, node, tree, camera, std::move(speech));
  timeline.enqueue(scene);
  return scene;
}

}  // namespace vizchat
