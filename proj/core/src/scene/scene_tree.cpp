#include "vizchat/scene/scene_tree.hpp"

#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "../detail/text.hpp"
#include "vizchat/error.hpp"

namespace vizchat {
namespace {

using json = nlohmann::json;

constexpr double kUnitNormTolerance = 1e-6;

[[noreturn]] void parse_error(const std::string& what) {
  throw Error(ErrorCode::kParseError, "scene tree: " + what);
}

[[noreturn]] void validation_error(const std::string& kind, const std::string& what) {
  throw Error(ErrorCode::kValidationError, kind + ": " + what);
}

Eigen::Vector3d read_vec3(const json& j, const std::string& field) {
  if (!j.is_array() || j.size() != 3) parse_error(field + " must be an array of 3 numbers");
  Eigen::Vector3d v;
  for (int i = 0; i < 3; ++i) {
    if (!j[i].is_number()) parse_error(field + " must be an array of 3 numbers");
    v[i] = j[i].get<double>();
  }
  return v;
}

template <typename T>
T required(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) parse_error(where + ": missing '" + key + "'");
  try {
    return it->get<T>();
  } catch (const json::exception&) {
    parse_error(where + ": field '" + key + "' has the wrong type");
  }
}

SceneNode parse_node(const json& j, std::size_t position) {
  const std::string where = "node #" + std::to_string(position);
  if (!j.is_object()) parse_error(where + " is not an object");

  SceneNode node;
  node.id = NodeId(required<std::string>(j, "id", where));
  node.name = required<std::string>(j, "name", where);
  node.label = j.value("label", node.name);
  if (auto it = j.find("parent_id"); it != j.end() && !it->is_null()) {
    if (!it->is_string()) parse_error(where + ": parent_id must be a string or null");
    node.parent_id = NodeId(it->get<std::string>());
  }
  node.description = j.value("description", std::string{});

  const auto count = j.value("instance_count", std::int64_t{0});
  if (count < 0) parse_error(where + ": instance_count must be non-negative");
  node.instance_count = static_cast<std::size_t>(count);

  if (auto it = j.find("instances"); it != j.end()) {
    if (!it->is_array()) parse_error(where + ": instances must be an array");
    for (const auto& inst : *it) {
      InstancePlacement placement;
      placement.position = read_vec3(inst.at("position"), where + ".position");
      const auto& q = inst.at("orientation");
      if (!q.is_array() || q.size() != 4) parse_error(where + ": orientation must be [w,x,y,z]");
      placement.orientation = Eigen::Quaterniond(q[0].get<double>(), q[1].get<double>(),
                                                 q[2].get<double>(), q[3].get<double>());
      node.instances.push_back(placement);
    }
  }

  if (auto it = j.find("bounding_sphere"); it != j.end()) {
    node.bounding_sphere.center = read_vec3(it->at("center"), where + ".bounding_sphere.center");
    node.bounding_sphere.radius = it->at("radius").get<double>();
  }
  return node;
}

}  // namespace

bool operator==(const SceneNode& a, const SceneNode& b) {
  if (a.id != b.id || a.name != b.name || a.label != b.label || a.parent_id != b.parent_id ||
      a.child_ids != b.child_ids || a.description != b.description ||
      a.instance_count != b.instance_count || a.instances.size() != b.instances.size() ||
      a.bounding_sphere.center != b.bounding_sphere.center ||
      a.bounding_sphere.radius != b.bounding_sphere.radius) {
    return false;
  }
  for (std::size_t i = 0; i < a.instances.size(); ++i) {
    if (a.instances[i].position != b.instances[i].position ||
        a.instances[i].orientation.coeffs() != b.instances[i].orientation.coeffs()) {
      return false;
    }
  }
  return true;
}

bool operator==(const SceneTree& a, const SceneTree& b) {
  return a.model_name_ == b.model_name_ && a.root_id_ == b.root_id_ && a.nodes_ == b.nodes_;
}

SceneTree SceneTree::load(std::istream& source) {
  json document;
  try {
    document = json::parse(source);
  } catch (const json::parse_error& e) {
    parse_error(e.what());
  }
  return from_json(document);
}

SceneTree SceneTree::load_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) parse_error("cannot open " + path.string());
  return load(in);
}

SceneTree SceneTree::from_json(const json& document) {
  if (!document.is_object()) parse_error("document must be an object");
  auto nodes_it = document.find("nodes");
  if (nodes_it == document.end() || !nodes_it->is_array()) parse_error("missing 'nodes' array");
  if (nodes_it->empty()) validation_error("empty", "tree has no nodes");

  SceneTree tree;
  tree.model_name_ = document.value("model_name", std::string{});

  try {
    std::size_t position = 0;
    for (const auto& j : *nodes_it) tree.nodes_.push_back(parse_node(j, position++));
  } catch (const json::exception& e) {
    parse_error(e.what());
  }

  for (std::size_t i = 0; i < tree.nodes_.size(); ++i) {
    if (!tree.index_.emplace(tree.nodes_[i].id, i).second) {
      validation_error("duplicate id", tree.nodes_[i].id.value);
    }
  }

  for (const auto& node : tree.nodes_) {
    if (node.parent_id && !tree.index_.contains(*node.parent_id)) {
      validation_error("orphan", node.id.value + " references missing parent " + node.parent_id->value);
    }
  }

  // Any parent chain longer than the node count revisits a node.
  for (const auto& node : tree.nodes_) {
    const SceneNode* cursor = &node;
    std::size_t steps = 0;
    while (cursor->parent_id) {
      if (*cursor->parent_id == node.id || ++steps > tree.nodes_.size()) {
        validation_error("cycle", "parent chain of " + node.id.value + " loops");
      }
      cursor = &tree.nodes_[tree.index_.at(*cursor->parent_id)];
    }
  }

  std::vector<NodeId> roots;
  for (const auto& node : tree.nodes_) {
    if (!node.parent_id) roots.push_back(node.id);
  }
  if (roots.size() != 1) {
    validation_error("multiple roots", std::to_string(roots.size()) + " nodes have no parent");
  }
  tree.root_id_ = roots.front();

  for (const auto& node : tree.nodes_) {
    if (node.parent_id) tree.nodes_[tree.index_.at(*node.parent_id)].child_ids.push_back(node.id);
  }

  std::unordered_map<std::string, NodeId> any_key;
  const auto claim = [&](const std::string& text, const NodeId& id, const char* field) {
    const std::string key = detail::to_lower(detail::trim(text));
    if (key.empty()) validation_error("empty name", id.value + " has an empty " + field);
    auto [it, inserted] = any_key.emplace(key, id);
    if (!inserted && it->second != id) {
      validation_error("duplicate name", "'" + text + "' names both " + it->second.value + " and " + id.value);
    }
    return key;
  };
  for (const auto& node : tree.nodes_) {
    tree.name_index_.emplace(claim(node.name, node.id, "name"), node.id);
    tree.label_index_.emplace(claim(node.label, node.id, "label"), node.id);
  }

  for (const auto& node : tree.nodes_) {
    if (detail::word_count(node.description) > kMaxDescriptionWords) {
      validation_error("description too long", node.id.value + " exceeds 25 words");
    }
    if (node.instance_count > 0 && !(node.bounding_sphere.radius > 0.0)) {
      validation_error("bounding sphere", node.id.value + " has instances but no positive radius");
    }
    if (node.bounding_sphere.radius < 0.0) {
      validation_error("bounding sphere", node.id.value + " has a negative radius");
    }
    if (node.instances.size() > node.instance_count) {
      validation_error("instances", node.id.value + " lists more placements than instance_count");
    }
    for (const auto& inst : node.instances) {
      if (std::abs(inst.orientation.norm() - 1.0) > kUnitNormTolerance) {
        validation_error("orientation", node.id.value + " has a non-unit quaternion");
      }
    }
  }
  return tree;
}

json SceneTree::to_json() const {
  json nodes = json::array();
  for (const auto& node : nodes_) {
    json instances = json::array();
    for (const auto& inst : node.instances) {
      const auto& q = inst.orientation;
      instances.push_back({
          {"position", {inst.position.x(), inst.position.y(), inst.position.z()}},
          {"orientation", {q.w(), q.x(), q.y(), q.z()}},
      });
    }
    const auto& sphere = node.bounding_sphere;
    nodes.push_back({
        {"id", node.id.value},
        {"name", node.name},
        {"label", node.label},
        {"parent_id", node.parent_id ? json(node.parent_id->value) : json(nullptr)},
        {"description", node.description},
        {"instance_count", node.instance_count},
        {"instances", std::move(instances)},
        {"bounding_sphere",
         {{"center", {sphere.center.x(), sphere.center.y(), sphere.center.z()}},
          {"radius", sphere.radius}}},
    });
  }
  return {{"model_name", model_name_}, {"nodes", std::move(nodes)}};
}

const SceneNode& SceneTree::node(const NodeId& id) const {
  if (const auto* found = find(id)) return *found;
  throw Error(ErrorCode::kUnknownNode, "unknown node '" + id.value + "'");
}

const SceneNode* SceneTree::find(const NodeId& id) const noexcept {
  auto it = index_.find(id);
  return it == index_.end() ? nullptr : &nodes_[it->second];
}

std::size_t SceneTree::leaf_count() const noexcept {
  std::size_t count = 0;
  for (const auto& node : nodes_) count += node.is_leaf() ? 1 : 0;
  return count;
}

std::optional<NodeId> SceneTree::find_node(std::string_view mention) const {
  std::string key = detail::to_lower(detail::trim(mention));
  if (key.empty()) return std::nullopt;
  for (int attempt = 0; attempt < 2; ++attempt) {
    if (auto it = name_index_.find(key); it != name_index_.end()) return it->second;
    if (auto it = label_index_.find(key); it != label_index_.end()) return it->second;
    if (key.size() < 2 || key.back() != 's') break;
    key.pop_back();
  }
  return std::nullopt;
}

std::vector<NodeId> SceneTree::path_to_root(const NodeId& id) const {
  std::vector<NodeId> path;
  const SceneNode* cursor = &node(id);
  path.push_back(cursor->id);
  while (cursor->parent_id) {
    cursor = &node(*cursor->parent_id);
    path.push_back(cursor->id);
  }
  return path;
}

std::size_t SceneTree::depth(const NodeId& id) const { return path_to_root(id).size() - 1; }

bool SceneTree::is_ancestor(const NodeId& ancestor, const NodeId& descendant) const {
  const SceneNode* cursor = &node(descendant);
  while (cursor->parent_id) {
    if (*cursor->parent_id == ancestor) return true;
    cursor = &node(*cursor->parent_id);
  }
  return false;
}

}  // namespace vizchat
