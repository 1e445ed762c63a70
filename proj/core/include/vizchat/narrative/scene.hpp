#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vizchat/scene/scene_tree.hpp"
#include "vizchat/visual/animation.hpp"
#include "vizchat/visual/camera.hpp"

namespace vizchat {

enum class SceneKind { kFocus, kOverview, kCuttingPlane, kSpeechOnly };

std::string_view to_string(SceneKind kind) noexcept;

struct Scene {
  SceneKind kind = SceneKind::kSpeechOnly;
  std::optional<NodeId> target_node_id;
  std::string speech;
  AnimationSpec animation;
  bool speech_done = false;
  bool animation_done = false;
  /// Set when the action that produced the scene already committed its pose
  /// to the session (direct manipulation); otherwise the pose is committed
  /// when the scene starts playing.
  bool state_applied = false;

  bool complete() const noexcept { return speech_done && animation_done; }
};

/// Builds one timeline scene starting from `camera`.
///
///   Focus:        approach the instance of `node` nearest the camera, then a
///                 slow orbit.
///   Overview:     frame the node's bounding sphere, plane on the sphere's near
///                 border, children highlighted.
///   CuttingPlane: frame as Overview, then sweep the plane to the centre.
///   SpeechOnly:   sway around the current target and back; no retarget.
///
/// `speech` defaults to the node description. Throws Error(kUnknownNode) for a
/// missing target and Error(kNoInstances) for Focus on a node without instances.
Scene build_scene(SceneKind kind, const std::optional<NodeId>& node, const SceneTree& tree,
                  const CameraState& camera, std::optional<std::string> speech = std::nullopt);

/// Plane snapped to the near border of `sphere` (normal = camera view
/// direction) and swept monotonically to its centre.
AnimationSpec plane_sweep(const CameraState& camera, const BoundingSphere& sphere,
                          std::optional<std::vector<NodeId>> highlights);

/// Index into `node.instances` closest to `eye`, or nullopt when none are listed.
std::optional<std::size_t> nearest_instance(const SceneNode& node, const Eigen::Vector3d& eye);

}  // namespace vizchat
