#pragma once

#include <cstddef>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <Eigen/Core>
#include <Eigen/Geometry>
#include <nlohmann/json_fwd.hpp>

namespace vizchat {

/// Opaque scene-node identifier as it appears in the scene-tree document.
struct NodeId {
  std::string value;

  NodeId() = default;
  explicit NodeId(std::string v) : value(std::move(v)) {}

  friend bool operator==(const NodeId&, const NodeId&) = default;
  friend auto operator<=>(const NodeId&, const NodeId&) = default;
};

}  // namespace vizchat

template <>
struct std::hash<vizchat::NodeId> {
  std::size_t operator()(const vizchat::NodeId& id) const noexcept {
    return std::hash<std::string>{}(id.value);
  }
};

namespace vizchat {

inline constexpr std::size_t kMaxDescriptionWords = 25;

struct InstancePlacement {
  Eigen::Vector3d position = Eigen::Vector3d::Zero();
  Eigen::Quaterniond orientation = Eigen::Quaterniond::Identity();
};

struct BoundingSphere {
  Eigen::Vector3d center = Eigen::Vector3d::Zero();
  double radius = 0.0;
};

struct SceneNode {
  NodeId id;
  std::string name;
  std::string label;
  std::optional<NodeId> parent_id;
  std::vector<NodeId> child_ids;
  std::string description;
  std::size_t instance_count = 0;
  std::vector<InstancePlacement> instances;
  BoundingSphere bounding_sphere;

  bool is_leaf() const noexcept { return child_ids.empty(); }
};

bool operator==(const SceneNode& a, const SceneNode& b);

/// Immutable multi-scale hierarchy of a model's ingredient types.
///
/// Built only through the loaders, which validate the document: a single root,
/// consistent and acyclic parent links, unique names and labels (compared
/// case-insensitively, across both fields), descriptions of at most 25 words,
/// unit-norm instance orientations and a positive radius for any node that has
/// instances. Once loaded the tree is never mutated, so one instance can be
/// shared read-only by every session that displays the model.
class SceneTree {
 public:
  static SceneTree load(std::istream& source);
  static SceneTree load_file(const std::filesystem::path& path);
  static SceneTree from_json(const nlohmann::json& document);

  nlohmann::json to_json() const;

  const std::string& model_name() const noexcept { return model_name_; }
  const NodeId& root_id() const noexcept { return root_id_; }
  const SceneNode& root() const { return node(root_id_); }

  /// Throws Error(kUnknownNode).
  const SceneNode& node(const NodeId& id) const;
  const SceneNode* find(const NodeId& id) const noexcept;
  bool contains(const NodeId& id) const noexcept { return index_.contains(id); }

  /// Nodes in document order.
  std::span<const SceneNode> nodes() const noexcept { return nodes_; }
  std::size_t size() const noexcept { return nodes_.size(); }
  std::size_t leaf_count() const noexcept;

  /// Case-insensitive lookup by name or label; retries once with a single
  /// trailing "s" removed.
  std::optional<NodeId> find_node(std::string_view mention) const;

  /// Node first, root last. Throws Error(kUnknownNode).
  std::vector<NodeId> path_to_root(const NodeId& id) const;
  std::size_t depth(const NodeId& id) const;
  bool is_ancestor(const NodeId& ancestor, const NodeId& descendant) const;

  const std::unordered_map<std::string, NodeId>& name_index() const noexcept { return name_index_; }
  const std::unordered_map<std::string, NodeId>& label_index() const noexcept { return label_index_; }

  friend bool operator==(const SceneTree& a, const SceneTree& b);

 private:
  SceneTree() = default;

  std::string model_name_;
  NodeId root_id_;
  std::vector<SceneNode> nodes_;
  std::unordered_map<NodeId, std::size_t> index_;
  std::unordered_map<std::string, NodeId> name_index_;
  std::unordered_map<std::string, NodeId> label_index_;
};

}  // namespace vizchat
