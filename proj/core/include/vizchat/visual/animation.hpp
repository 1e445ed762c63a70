#pragma once

#include <optional>
#include <vector>

#include "vizchat/scene/scene_tree.hpp"
#include "vizchat/visual/camera.hpp"

namespace vizchat {

/// Pose reached at the end of a keyframe, `duration` seconds after the
/// previous one (or after playback start for the first keyframe). A plane or
/// highlight set left empty carries the previous value forward.
struct Keyframe {
  CameraState camera;
  std::optional<CuttingPlaneState> plane;
  std::optional<std::vector<NodeId>> highlights;
  double duration = 1.0;
};

struct AnimationSpec {
  std::vector<Keyframe> keyframes;

  bool empty() const noexcept { return keyframes.empty(); }
  double total_duration() const noexcept;
};

struct Pose {
  CameraState camera;
  CuttingPlaneState plane;
  std::vector<NodeId> highlights;

  friend bool operator==(const Pose&, const Pose&) = default;
};

/// Pose of `spec` played from `start` after `elapsed` seconds. Keyframe
/// boundaries are hit exactly, so the final pose does not depend on how the
/// elapsed time was accumulated.
Pose sample(const Pose& start, const AnimationSpec& spec, double elapsed);

/// Pose after the last keyframe.
Pose final_pose(const Pose& start, const AnimationSpec& spec);

class AnimationPlayer {
 public:
  AnimationPlayer(Pose start, AnimationSpec spec);

  /// Returns true on the call that exhausts the keyframes.
  bool advance(double dt);

  bool finished() const noexcept { return finished_; }
  double elapsed() const noexcept { return elapsed_; }
  const AnimationSpec& spec() const noexcept { return spec_; }
  Pose pose() const;

 private:
  Pose start_;
  AnimationSpec spec_;
  double elapsed_ = 0.0;
  bool finished_ = false;
};

}  // namespace vizchat

namespace vizchat {

// Fixed move durations, in seconds.
inline constexpr double kTransformDuration = 1.0;
inline constexpr double kFlyDuration = 2.0;
inline constexpr double kCuttingSweepDuration = 3.0;
inline constexpr double kPlaneSnapDuration = 0.25;
inline constexpr int kCuttingSweepSteps = 6;
inline constexpr double kFocusSpinDegrees = 20.0;
inline constexpr double kFocusSpinDuration = 3.0;
inline constexpr double kIdleSwayDegrees = 8.0;
inline constexpr double kIdleSwayDuration = 2.0;

}  // namespace vizchat
