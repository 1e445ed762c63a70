#include "vizchat/gateway/snapshot.hpp"

namespace vizchat {
namespace {

using json = nlohmann::json;

json vec(const Eigen::Vector3d& v) { return json::array({v.x(), v.y(), v.z()}); }

json ids(const std::vector<NodeId>& nodes) {
  json out = json::array();
  for (const auto& id : nodes) out.push_back(id.value);
  return out;
}

json node_ref(const SceneNode& node) { return {{"id", node.id.value}, {"name", node.name}}; }

json options_json(const std::vector<NodeId>& options, const SceneTree& tree) {
  json out = json::array();
  for (std::size_t i = 0; i < options.size(); ++i) {
    const SceneNode& node = tree.node(options[i]);
    out.push_back({{"index", i}, {"id", node.id.value}, {"name", node.name}});
  }
  return out;
}

}  // namespace

json to_json(const CameraState& camera) {
  return {
      {"target", vec(camera.target)},
      {"distance", camera.distance},
      {"yaw", camera.yaw},
      {"pitch", camera.pitch},
      {"roll", camera.roll},
      {"eye", vec(camera.eye())},
      {"view_direction", vec(camera.view_direction())},
      {"up", vec(camera.up())},
  };
}

json to_json(const CuttingPlaneState& plane) {
  return {
      {"normal", vec(plane.normal)},
      {"offset", plane.offset},
      {"enabled", plane.enabled},
      {"anchor", vec(plane.anchor)},
  };
}

json to_json(const Scene& scene, const SceneTree& tree) {
  json target = nullptr;
  if (scene.target_node_id) target = node_ref(tree.node(*scene.target_node_id));
  return {
      {"kind", to_string(scene.kind)},
      {"target", std::move(target)},
      {"speech", scene.speech},
      {"speech_done", scene.speech_done},
      {"animation_done", scene.animation_done},
      {"duration", scene.animation.total_duration()},
  };
}

json snapshot(const SessionState& session, std::string_view session_id) {
  const SceneTree& tree = session.tree();
  const ViewState& view = session.view();
  const Pose shown = session.displayed_pose();
  const SceneNode& current = tree.node(view.current_node);

  json labels = json::array();
  labels.push_back({{"id", current.id.value}, {"name", current.name}, {"label", current.label}});
  for (const auto& child_id : current.child_ids) {
    const SceneNode& child = tree.node(child_id);
    labels.push_back({{"id", child.id.value}, {"name", child.name}, {"label", child.label}});
  }

  const auto& timeline = session.timeline();
  const auto& plan = session.exploration();
  json visited = json::array();
  for (const auto& id : plan.visited()) visited.push_back(node_ref(tree.node(id)));

  const auto& conversation = session.conversation();
  json tail = json::array();
  const std::size_t first =
      conversation.size() > kSnapshotConversationTail ? conversation.size() - kSnapshotConversationTail : 0;
  for (std::size_t i = first; i < conversation.size(); ++i) {
    tail.push_back({{"speaker", conversation[i].speaker}, {"text", conversation[i].text}});
  }

  return {
      {"version", kSnapshotVersion},
      {"session_id", session_id},
      {"model", tree.model_name()},
      {"view",
       {{"camera", to_json(view.camera)},
        {"plane", to_json(view.plane)},
        {"current_node", node_ref(current)},
        {"scale_level", view.scale_level},
        {"highlights", ids(view.highlights)}}},
      {"displayed",
       {{"camera", to_json(shown.camera)}, {"plane", to_json(shown.plane)}, {"highlights", ids(shown.highlights)}}},
      {"animating", session.animating()},
      {"labels", std::move(labels)},
      {"scene", timeline.current() ? to_json(*timeline.current(), tree) : json(nullptr)},
      {"queue_length", timeline.size()},
      {"exploration",
       {{"active", plan.active()},
        {"options", plan.active() ? options_json(plan.options(), tree) : json::array()},
        {"visited", std::move(visited)}}},
      {"awaiting_detail", session.awaiting_detail()},
      {"history_depth", session.history().size()},
      {"conversation", std::move(tail)},
  };
}

json to_json(const QueryResult& result, const SceneTree& tree) {
  json scenes = json::array();
  for (const auto& scene : result.scenes) scenes.push_back(to_json(scene, tree));
  json pilot = nullptr;
  if (result.pilot) {
    pilot = {{"command", to_string(result.pilot->command)},
             {"target", result.pilot->target ? json(result.pilot->target->value) : json(nullptr)},
             {"direction", result.pilot->direction == ScaleDirection::kUp ? "up" : "down"}};
  }
  json transform = nullptr;
  if (result.transform) {
    transform = {{"zoom_factor", result.transform->zoom_factor},
                 {"yaw", result.transform->yaw},
                 {"pitch", result.transform->pitch},
                 {"roll", result.transform->roll}};
  }
  return {
      {"intent", result.intent ? json(to_string(*result.intent)) : json(nullptr)},
      {"help", result.help},
      {"narration", result.narration},
      {"scenes", std::move(scenes)},
      {"pilot", std::move(pilot)},
      {"transform", std::move(transform)},
      {"options", options_json(result.options, tree)},
      {"awaiting_detail", result.awaiting_detail},
      {"error", result.error ? json(to_string(*result.error)) : json(nullptr)},
  };
}

}  // namespace vizchat
