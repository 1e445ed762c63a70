#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "vizchat/narrative/keywords.hpp"
#include "vizchat/scene/scene_tree.hpp"

namespace vizchat {

/// Minimum index of a subtree with no mentions.
inline constexpr std::size_t kUntouched = std::numeric_limits<std::size_t>::max();

/// Per-query minimum mention index of every node's subtree. Kept outside the
/// tree so concurrent sessions can sort against the same SceneTree.
using WorkingIndexMap = std::unordered_map<NodeId, std::size_t>;

/// Bottom-up: each node gets the minimum of its own hit index and its
/// children's values; subtrees without hits stay at kUntouched.
WorkingIndexMap update_minimum_index(const SceneTree& tree, const KeywordHits& hits);

/// Depth-first from the root, visiting children in ascending minimum index
/// (document order breaks ties) and emitting each node that has a hit. A hit
/// whose ancestors were never mentioned is still emitted.
std::vector<NodeId> sort_nodes(const SceneTree& tree, const KeywordHits& hits,
                               const WorkingIndexMap& working);
std::vector<NodeId> sort_nodes(const SceneTree& tree, const KeywordHits& hits);

/// detect_keywords + update_minimum_index + sort_nodes.
std::vector<NodeId> node_sorting(std::string_view text, const SceneTree& tree);

/// The deepest node mentioned in `question`; ties go to the earlier mention.
std::optional<NodeId> select_focus_node(std::string_view question, const SceneTree& tree);

}  // namespace vizchat
