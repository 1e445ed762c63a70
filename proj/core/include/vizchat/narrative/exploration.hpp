#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "vizchat/narrative/timeline.hpp"
#include "vizchat/scene/scene_tree.hpp"

namespace vizchat {

/// Number of nodes offered to the user at a time.
inline constexpr std::size_t kExplorationOptionCount = 2;

/// Interactive walk over the nodes an answer mentions, in node-sorting order.
/// Never offers a node twice: selected nodes are visited, nodes passed over
/// with "show me more" are skipped.
class ExplorationPlan {
 public:
  ExplorationPlan() = default;

  bool active() const noexcept { return active_; }
  const std::vector<NodeId>& node_list() const noexcept { return node_list_; }
  const std::vector<NodeId>& options() const noexcept { return options_; }
  const std::vector<NodeId>& visited() const noexcept { return visited_; }
  const std::optional<NodeId>& focus_node() const noexcept { return focus_node_; }

  /// Enqueues the chosen option's scene (speech = node description), marks it
  /// visited and offers the next options. Throws Error(kNoPendingOptions) or
  /// Error(kIndexOutOfRange); `index` is zero-based.
  Scene select(std::size_t index, const SceneTree& tree, Timeline& timeline, const CameraState& camera,
               std::optional<std::string> speech = std::nullopt);

  /// Passes over the current options and offers the next ones.
  const std::vector<NodeId>& skip();

  void finish() noexcept;

 private:
  friend ExplorationPlan run_exploration(std::string_view, std::string_view, const SceneTree&,
                                         Timeline&, const CameraState&);
  void refresh_options();

  bool active_ = false;
  std::optional<NodeId> focus_node_;
  std::vector<NodeId> node_list_;
  std::vector<NodeId> options_;
  std::vector<NodeId> visited_;
  std::unordered_set<NodeId> offered_out_;
};

/// Starts an exploration: the deepest node the question mentions gets a scene
/// narrated with `answer` (or a SpeechOnly scene when none is mentioned), and
/// the answer's sorted node list seeds the options.
ExplorationPlan run_exploration(std::string_view question, std::string_view answer,
                                const SceneTree& tree, Timeline& timeline, const CameraState& camera);

}  // namespace vizchat
