#include "vizchat/narrative/scene.hpp"

#include <cmath>

#include "vizchat/error.hpp"

namespace vizchat {
namespace {

CameraState framing(const CameraState& camera, const BoundingSphere& sphere) {
  CameraState framed = camera;
  framed.target = sphere.center;
  framed.distance = framing_distance(sphere.radius);
  return framed;
}

CuttingPlaneState border_plane(const CameraState& camera, const BoundingSphere& sphere) {
  CuttingPlaneState plane;
  plane.normal = camera.view_direction();
  plane.offset = sphere.radius;
  plane.enabled = true;
  plane.anchor = sphere.center;
  return plane;
}

Scene focus_scene(const SceneNode& node, const CameraState& camera) {
  if (node.instance_count == 0) {
    throw Error(ErrorCode::kNoInstances, "'" + node.name + "' has no instances to focus on");
  }
  const auto nearest = nearest_instance(node, camera.eye());
  const Eigen::Vector3d position = nearest ? node.instances[*nearest].position : node.bounding_sphere.center;
  // One instance's extent, assuming the instances pack the bounding sphere.
  const double extent = node.bounding_sphere.radius / std::cbrt(static_cast<double>(node.instance_count));

  Keyframe approach;
  approach.camera = camera;
  approach.camera.target = position;
  approach.camera.distance = framing_distance(extent);
  approach.plane = CuttingPlaneState{};
  approach.highlights = std::vector<NodeId>{node.id};
  approach.duration = kFlyDuration;

  Keyframe spin = approach;
  spin.camera.yaw += kFocusSpinDegrees;
  spin.plane.reset();
  spin.highlights.reset();
  spin.duration = kFocusSpinDuration;

  Scene scene;
  scene.kind = SceneKind::kFocus;
  scene.animation.keyframes = {approach, spin};
  return scene;
}

Scene overview_scene(const SceneNode& node, const CameraState& camera) {
  Keyframe frame;
  frame.camera = framing(camera, node.bounding_sphere);
  frame.plane = border_plane(camera, node.bounding_sphere);
  frame.highlights = node.child_ids;
  frame.duration = kFlyDuration;

  Scene scene;
  scene.kind = SceneKind::kOverview;
  scene.animation.keyframes = {frame};
  return scene;
}

Scene cutting_scene(const SceneNode& node, const CameraState& camera) {
  Scene scene = overview_scene(node, camera);
  scene.kind = SceneKind::kCuttingPlane;
  const CameraState framed = scene.animation.keyframes.front().camera;
  auto sweep = plane_sweep(framed, node.bounding_sphere, std::nullopt);
  // The overview keyframe already put the plane on the border.
  sweep.keyframes.erase(sweep.keyframes.begin());
  for (auto& key : sweep.keyframes) scene.animation.keyframes.push_back(std::move(key));
  return scene;
}

Scene speech_only_scene(const CameraState& camera) {
  Keyframe out;
  out.camera = camera;
  out.camera.yaw += kIdleSwayDegrees;
  out.duration = kIdleSwayDuration;
  Keyframe back;
  back.camera = camera;
  back.duration = kIdleSwayDuration;

  Scene scene;
  scene.kind = SceneKind::kSpeechOnly;
  scene.animation.keyframes = {out, back};
  return scene;
}

}  // namespace

std::string_view to_string(SceneKind kind) noexcept {
  switch (kind) {
    case SceneKind::kFocus: return "Focus";
    case SceneKind::kOverview: return "Overview";
    case SceneKind::kCuttingPlane: return "CuttingPlane";
    case SceneKind::kSpeechOnly: return "SpeechOnly";
  }
  return "Unknown";
}

std::optional<std::size_t> nearest_instance(const SceneNode& node, const Eigen::Vector3d& eye) {
  std::optional<std::size_t> best;
  double best_distance = 0.0;
  for (std::size_t i = 0; i < node.instances.size(); ++i) {
    const double d = (node.instances[i].position - eye).squaredNorm();
    if (!best || d < best_distance) {
      best = i;
      best_distance = d;
    }
  }
  return best;
}

AnimationSpec plane_sweep(const CameraState& camera, const BoundingSphere& sphere,
                          std::optional<std::vector<NodeId>> highlights) {
  AnimationSpec spec;
  Keyframe snap;
  snap.camera = camera;
  snap.plane = border_plane(camera, sphere);
  snap.highlights = std::move(highlights);
  snap.duration = kPlaneSnapDuration;
  spec.keyframes.push_back(snap);

  for (int step = 1; step <= kCuttingSweepSteps; ++step) {
    Keyframe key;
    key.camera = camera;
    key.plane = *snap.plane;
    key.plane->offset = sphere.radius * (1.0 - static_cast<double>(step) / kCuttingSweepSteps);
    key.duration = kCuttingSweepDuration / kCuttingSweepSteps;
    spec.keyframes.push_back(key);
  }
  return spec;
}

Scene build_scene(SceneKind kind, const std::optional<NodeId>& node, const SceneTree& tree,
                  const CameraState& camera, std::optional<std::string> speech) {
  if (kind == SceneKind::kSpeechOnly) {
    Scene scene = speech_only_scene(camera);
    if (speech) scene.speech = std::move(*speech);
    return scene;
  }
  if (!node) throw Error(ErrorCode::kUnknownNode, std::string(to_string(kind)) + " scene needs a target node");

  const SceneNode& target = tree.node(*node);
  Scene scene;
  switch (kind) {
    case SceneKind::kFocus: scene = focus_scene(target, camera); break;
    case SceneKind::kOverview: scene = overview_scene(target, camera); break;
    case SceneKind::kCuttingPlane: scene = cutting_scene(target, camera); break;
    case SceneKind::kSpeechOnly: break;
  }
  scene.target_node_id = target.id;
  scene.speech = speech ? std::move(*speech) : target.description;
  return scene;
}

}  // namespace vizchat
