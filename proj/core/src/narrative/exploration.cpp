#include "vizchat/narrative/exploration.hpp"

#include <string>

#include "vizchat/error.hpp"
#include "vizchat/narrative/node_sorting.hpp"

namespace vizchat {

void ExplorationPlan::refresh_options() {
  options_.clear();
  for (const auto& id : node_list_) {
    if (options_.size() == kExplorationOptionCount) break;
    if (!offered_out_.contains(id)) options_.push_back(id);
  }
  if (options_.empty()) active_ = false;
}

Scene ExplorationPlan::select(std::size_t index, const SceneTree& tree, Timeline& timeline,
                              const CameraState& camera, std::optional<std::string> speech) {
  if (!active_ || options_.empty()) throw Error(ErrorCode::kNoPendingOptions, "no options are pending");
  if (index >= options_.size()) {
    throw Error(ErrorCode::kIndexOutOfRange, "option " + std::to_string(index) + " of " +
                                                 std::to_string(options_.size()));
  }
  const NodeId chosen = options_[index];
  Scene scene = add_to_timeline(timeline, chosen, tree, camera, std::move(speech));
  visited_.push_back(chosen);
  offered_out_.insert(chosen);
  refresh_options();
  return scene;
}

const std::vector<NodeId>& ExplorationPlan::skip() {
  for (const auto& id : options_) offered_out_.insert(id);
  refresh_options();
  return options_;
}

void ExplorationPlan::finish() noexcept {
  active_ = false;
  options_.clear();
}

ExplorationPlan run_exploration(std::string_view question, std::string_view answer,
                                const SceneTree& tree, Timeline& timeline, const CameraState& camera) {
  ExplorationPlan plan;
  plan.focus_node_ = select_focus_node(question, tree);
  if (plan.focus_node_) {
    try {
      add_to_timeline(timeline, *plan.focus_node_, tree, camera, std::string(answer));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kNoInstances) throw;
      timeline.enqueue(build_scene(SceneKind::kOverview, plan.focus_node_, tree, camera, std::string(answer)));
    }
    plan.visited_.push_back(*plan.focus_node_);
    plan.offered_out_.insert(*plan.focus_node_);
  } else {
    timeline.enqueue(build_scene(SceneKind::kSpeechOnly, std::nullopt, tree, camera, std::string(answer)));
  }

  plan.node_list_ = node_sorting(answer, tree);
  plan.active_ = true;
  plan.refresh_options();
  return plan;
}

}  // namespace vizchat
