#include "vizchat/visual/session_state.hpp"

#include "vizchat/error.hpp"

namespace vizchat {
namespace {

double safe_framing(const BoundingSphere& sphere, double fallback) {
  return sphere.radius > 0.0 ? framing_distance(sphere.radius) : fallback;
}

}  // namespace

std::pair<CameraState, AnimationSpec> apply_transform(const CameraState& camera, const Transform& t) {
  if (!(t.zoom_factor > 0.0)) throw Error(ErrorCode::kNonPositiveZoom, "zoom factor must be positive");
  if (t.is_identity()) return {camera, {}};

  CameraState next = camera;
  next.distance = camera.distance / t.zoom_factor;
  next.yaw += t.yaw;
  next.pitch += t.pitch;
  next.roll += t.roll;

  AnimationSpec spec;
  spec.keyframes.push_back(Keyframe{next, std::nullopt, std::nullopt, kTransformDuration});
  return {next, std::move(spec)};
}

SessionState::SessionState(std::shared_ptr<const SceneTree> tree, std::uint64_t narration_seed)
    : tree_(std::move(tree)),
      view_(default_view(*tree_)),
      shown_{view_.camera, view_.plane, view_.highlights},
      narration_seed_(narration_seed) {}

ViewState SessionState::default_view(const SceneTree& tree) {
  const SceneNode& root = tree.root();
  ViewState view;
  view.camera.target = root.bounding_sphere.center;
  view.camera.distance = safe_framing(root.bounding_sphere, 1.0);
  view.plane.anchor = root.bounding_sphere.center;
  view.current_node = root.id;
  return view;
}

Pose SessionState::displayed_pose() const {
  if (animating()) return player_->pose();
  return shown_;
}

void SessionState::push_history() {
  history_.push_back(view_);
  while (history_.size() > kHistoryCap) history_.pop_front();
}

AnimationSpec SessionState::animate_to(const ViewState& target, double duration) const {
  AnimationSpec spec;
  if (target.camera == view_.camera && target.plane == view_.plane && target.highlights == view_.highlights) {
    return spec;
  }
  spec.keyframes.push_back(Keyframe{target.camera, target.plane, target.highlights, duration});
  return spec;
}

AnimationSpec SessionState::explore(const Transform& t) {
  auto [camera, spec] = apply_transform(view_.camera, t);
  push_history();
  view_.camera = camera;
  return spec;
}

AnimationSpec SessionState::fly_to(const NodeId& id) {
  const SceneNode& node = tree_->node(id);
  ViewState next = view_;
  next.camera.target = node.bounding_sphere.center;
  next.camera.distance = safe_framing(node.bounding_sphere, view_.camera.distance);
  next.current_node = node.id;
  next.scale_level = static_cast<int>(tree_->depth(node.id));

  AnimationSpec spec = animate_to(next, kFlyDuration);
  push_history();
  view_ = std::move(next);
  return spec;
}

AnimationSpec SessionState::change_scale(ScaleDirection direction) {
  const SceneNode& current = tree_->node(view_.current_node);
  if (direction == ScaleDirection::kUp) {
    if (view_.scale_level <= 0 || !current.parent_id) {
      throw Error(ErrorCode::kAtRoot, "already showing the whole model");
    }
    return fly_to(*current.parent_id);
  }

  if (current.is_leaf()) throw Error(ErrorCode::kNoChildren, "'" + current.name + "' has no parts");
  const Eigen::Vector3d eye = view_.camera.eye();
  const SceneNode* nearest = nullptr;
  double nearest_distance = 0.0;
  for (const auto& child_id : current.child_ids) {
    const SceneNode& child = tree_->node(child_id);
    const double d = (child.bounding_sphere.center - eye).norm();
    if (nearest == nullptr || d < nearest_distance) {
      nearest = &child;
      nearest_distance = d;
    }
  }
  return fly_to(nearest->id);
}

AnimationSpec SessionState::reset() {
  const ViewState fresh = default_view(*tree_);
  AnimationSpec spec = animate_to(fresh, kFlyDuration);
  view_ = fresh;
  history_.clear();
  return spec;
}

AnimationSpec SessionState::return_back() {
  if (history_.empty()) throw Error(ErrorCode::kEmptyHistory, "nothing to go back to");
  ViewState previous = std::move(history_.back());
  history_.pop_back();
  AnimationSpec spec = animate_to(previous, kFlyDuration);
  view_ = std::move(previous);
  return spec;
}

AnimationSpec SessionState::set_cutting_plane() {
  const SceneNode& node = tree_->node(view_.current_node);
  AnimationSpec spec = plane_sweep(view_.camera, node.bounding_sphere, node.child_ids);
  push_history();
  const Pose end = final_pose(Pose{view_.camera, view_.plane, view_.highlights}, spec);
  view_.plane = end.plane;
  view_.highlights = end.highlights;
  return spec;
}

void SessionState::start_current() {
  // Scenes with nothing to play or say complete on the spot.
  while (Scene* scene = timeline_.current_mut()) {
    ++scenes_started_;
    const Pose start = displayed_pose();
    if (!scene->state_applied) {
      const Pose end = final_pose(start, scene->animation);
      if (scene->kind != SceneKind::kSpeechOnly) push_history();
      view_.camera = end.camera;
      view_.plane = end.plane;
      view_.highlights = end.highlights;
      if (scene->target_node_id && scene->kind != SceneKind::kSpeechOnly) {
        view_.current_node = *scene->target_node_id;
        view_.scale_level = static_cast<int>(tree_->depth(view_.current_node));
      }
      scene->state_applied = true;
    }
    player_.emplace(start, scene->animation);

    bool advanced = false;
    if (scene->speech.empty() && !scene->speech_done) {
      advanced = timeline_.advance(CompletionSignal::kSpeechDone).finished.has_value();
    }
    if (!advanced && scene->animation.empty() && !scene->animation_done) {
      shown_ = start;
      player_.reset();
      advanced = timeline_.advance(CompletionSignal::kAnimationDone).finished.has_value();
    }
    if (!advanced) return;
  }
  if (player_) shown_ = player_->pose();
  player_.reset();
}

void SessionState::enqueue(Scene scene) {
  timeline_.enqueue(std::move(scene));
  if (timeline_.start_next()) start_current();
}

void SessionState::interrupt(Scene scene) {
  if (player_) shown_ = player_->pose();
  timeline_.clear();
  player_.reset();
  enqueue(std::move(scene));
}

Scene SessionState::begin_exploration(std::string_view question, std::string_view answer) {
  if (player_) shown_ = player_->pose();
  timeline_.clear();
  player_.reset();
  exploration_ = run_exploration(question, answer, *tree_, timeline_, view_.camera);
  Scene opening = timeline_.pending().back();
  if (timeline_.start_next()) start_current();
  return opening;
}

Scene SessionState::select_option(std::size_t index, std::optional<std::string> speech) {
  Scene scene = exploration_.select(index, *tree_, timeline_, view_.camera, std::move(speech));
  if (timeline_.start_next()) start_current();
  return scene;
}

TimelineAdvance SessionState::signal(CompletionSignal signal) {
  TimelineAdvance result = timeline_.advance(signal);
  if (result.finished && result.next) start_current();
  return result;
}

std::vector<CompletionSignal> SessionState::tick(double dt) {
  std::vector<CompletionSignal> emitted;
  if (!player_ || player_->finished()) return emitted;
  if (player_->advance(dt)) {
    shown_ = player_->pose();
    emitted.push_back(CompletionSignal::kAnimationDone);
    if (timeline_.current()) signal(CompletionSignal::kAnimationDone);
  }
  return emitted;
}

std::optional<std::shared_future<std::string>> SessionState::take_pending_detail() {
  auto detail = std::move(pending_detail_);
  pending_detail_.reset();
  return detail;
}

std::uint64_t SessionState::next_narration_seed() noexcept {
  // splitmix64 over (seed, draw count)
  std::uint64_t z = narration_seed_ + 0x9E3779B97F4A7C15ULL * ++narration_draws_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace vizchat
