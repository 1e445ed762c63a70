#include "vizchat/visual/animation.hpp"

namespace vizchat {
namespace {

// Accumulated tick deltas may fall short of a keyframe boundary by rounding.
constexpr double kTimeEpsilon = 1e-9;

Pose apply_keyframe(const Pose& from, const Keyframe& key) {
  Pose to = from;
  to.camera = key.camera;
  if (key.plane) to.plane = *key.plane;
  if (key.highlights) to.highlights = *key.highlights;
  return to;
}

}  // namespace

double AnimationSpec::total_duration() const noexcept {
  double total = 0.0;
  for (const auto& key : keyframes) total += key.duration;
  return total;
}

Pose sample(const Pose& start, const AnimationSpec& spec, double elapsed) {
  Pose current = start;
  double remaining = elapsed;
  for (const auto& key : spec.keyframes) {
    const Pose next = apply_keyframe(current, key);
    if (remaining + kTimeEpsilon >= key.duration) {
      current = next;
      remaining -= key.duration;
      continue;
    }
    const double t = remaining / key.duration;
    Pose blended;
    blended.camera = interpolate(current.camera, next.camera, t);
    blended.plane = interpolate(current.plane, next.plane, t);
    blended.highlights = t > 0.0 ? next.highlights : current.highlights;
    return blended;
  }
  return current;
}

Pose final_pose(const Pose& start, const AnimationSpec& spec) {
  Pose current = start;
  for (const auto& key : spec.keyframes) current = apply_keyframe(current, key);
  return current;
}

AnimationPlayer::AnimationPlayer(Pose start, AnimationSpec spec)
    : start_(std::move(start)), spec_(std::move(spec)) {}

bool AnimationPlayer::advance(double dt) {
  if (finished_) return false;
  elapsed_ += dt;
  if (elapsed_ + kTimeEpsilon >= spec_.total_duration()) {
    finished_ = true;
    return true;
  }
  return false;
}

Pose AnimationPlayer::pose() const {
  return finished_ ? final_pose(start_, spec_) : sample(start_, spec_, elapsed_);
}

}  // namespace vizchat
