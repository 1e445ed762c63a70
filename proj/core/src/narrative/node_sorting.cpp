#include "vizchat/narrative/node_sorting.hpp"

#include <algorithm>

namespace vizchat {
namespace {

std::vector<const SceneNode*> breadth_first(const SceneTree& tree) {
  std::vector<const SceneNode*> order{&tree.root()};
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (const auto& child : order[i]->child_ids) order.push_back(&tree.node(child));
  }
  return order;
}

}  // namespace

WorkingIndexMap update_minimum_index(const SceneTree& tree, const KeywordHits& hits) {
  WorkingIndexMap working;
  working.reserve(tree.size());
  const auto order = breadth_first(tree);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const SceneNode& node = **it;
    std::size_t value = kUntouched;
    if (auto hit = hits.find(node.id); hit != hits.end()) value = hit->second;
    for (const auto& child : node.child_ids) value = std::min(value, working.at(child));
    working[node.id] = value;
  }
  return working;
}

std::vector<NodeId> sort_nodes(const SceneTree& tree, const KeywordHits& hits,
                               const WorkingIndexMap& working) {
  std::vector<NodeId> result;
  result.reserve(hits.size());
  const auto value_of = [&](const NodeId& id) {
    auto it = working.find(id);
    return it == working.end() ? kUntouched : it->second;
  };

  std::vector<const SceneNode*> stack{&tree.root()};
  std::vector<const SceneNode*> children;
  while (!stack.empty()) {
    const SceneNode& node = *stack.back();
    stack.pop_back();
    if (hits.contains(node.id)) result.push_back(node.id);

    children.clear();
    for (const auto& child : node.child_ids) {
      if (value_of(child) != kUntouched) children.push_back(&tree.node(child));
    }
    std::stable_sort(children.begin(), children.end(), [&](const SceneNode* a, const SceneNode* b) {
      return value_of(a->id) < value_of(b->id);
    });
    stack.insert(stack.end(), children.rbegin(), children.rend());
  }
  return result;
}

std::vector<NodeId> sort_nodes(const SceneTree& tree, const KeywordHits& hits) {
  return sort_nodes(tree, hits, update_minimum_index(tree, hits));
}

std::vector<NodeId> node_sorting(std::string_view text, const SceneTree& tree) {
  return sort_nodes(tree, detect_keywords(text, tree));
}

std::optional<NodeId> select_focus_node(std::string_view question, const SceneTree& tree) {
  const KeywordHits hits = detect_keywords(question, tree);
  std::optional<NodeId> best;
  std::size_t best_depth = 0;
  std::size_t best_index = 0;
  for (const auto& [id, index] : hits) {
    const std::size_t depth = tree.depth(id);
    if (!best || depth > best_depth || (depth == best_depth && index < best_index)) {
      best = id;
      best_depth = depth;
      best_index = index;
    }
  }
  return best;
}

}  // namespace vizchat
