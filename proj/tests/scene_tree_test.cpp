#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "test_support.hpp"
#include "vizchat/error.hpp"

namespace vizchat {
namespace {

using json = nlohmann::json;

json node(const std::string& id, const std::string& name, json parent, const std::string& description = "A part.") {
  return {{"id", id},
          {"name", name},
          {"parent_id", std::move(parent)},
          {"description", description},
          {"instance_count", 1},
          {"instances", {{{"position", {0, 0, 0}}, {"orientation", {1, 0, 0, 0}}}}},
          {"bounding_sphere", {{"center", {0, 0, 0}}, {"radius", 1.0}}}};
}

json doc(json nodes) { return {{"model_name", "test"}, {"nodes", std::move(nodes)}}; }

ErrorCode load_error(const json& document, std::string* message = nullptr) {
  try {
    SceneTree::from_json(document);
  } catch (const Error& e) {
    if (message) *message = e.what();
    return e.code();
  }
  ADD_FAILURE() << "document loaded";
  return ErrorCode::kBadRequest;
}

TEST(SceneTree, FixtureCounts) {
  const auto t4 = test::t4();
  EXPECT_EQ(t4->size(), 39u);
  EXPECT_EQ(t4->leaf_count(), 31u);
  EXPECT_EQ(t4->size() - t4->leaf_count(), 8u);
  EXPECT_EQ(test::model("sars_cov_2.json")->size(), 16u);
  EXPECT_EQ(test::hiv()->size(), 42u);
}

TEST(SceneTree, SingleNodeDocument) {
  const SceneTree tree = SceneTree::from_json(doc({node("r", "root", nullptr)}));
  EXPECT_EQ(tree.root_id(), NodeId("r"));
  EXPECT_TRUE(tree.root().child_ids.empty());
  EXPECT_EQ(tree.path_to_root(NodeId("r")), std::vector<NodeId>{NodeId("r")});
}

TEST(SceneTree, ChildListsFollowDocumentOrder) {
  const SceneTree tree = SceneTree::from_json(
      doc({node("r", "root", nullptr), node("b", "bee", "r"), node("a", "ay", "r"), node("c", "sea", "b")}));
  EXPECT_EQ(tree.root().child_ids, (std::vector<NodeId>{NodeId("b"), NodeId("a")}));
  EXPECT_EQ(tree.node(NodeId("b")).child_ids, std::vector<NodeId>{NodeId("c")});
}

TEST(SceneTree, ParentChildConsistencyOnFixtures) {
  for (const auto& file : {"t4.json", "sars_cov_2.json", "hiv.json"}) {
    const auto tree = test::model(file);
    std::size_t roots = 0;
    for (const auto& n : tree->nodes()) {
      if (!n.parent_id) {
        ++roots;
        continue;
      }
      const auto& siblings = tree->node(*n.parent_id).child_ids;
      EXPECT_EQ(std::count(siblings.begin(), siblings.end(), n.id), 1) << file << " " << n.name;
      for (const auto& child : n.child_ids) EXPECT_EQ(tree->node(child).parent_id, n.id);
    }
    EXPECT_EQ(roots, 1u) << file;
  }
}

TEST(SceneTree, SelfParentIsCycle) {
  std::string message;
  EXPECT_EQ(load_error(doc({node("r", "root", nullptr), node("x", "ex", "x")}), &message),
            ErrorCode::kValidationError);
  EXPECT_EQ(message.rfind("cycle", 0), 0u) << message;
}

TEST(SceneTree, LongerCycleIsRejected) {
  std::string message;
  load_error(doc({node("r", "root", nullptr), node("a", "ay", "b"), node("b", "bee", "a")}), &message);
  EXPECT_EQ(message.rfind("cycle", 0), 0u) << message;
}

TEST(SceneTree, ValidationFailures) {
  std::string message;
  EXPECT_EQ(load_error(doc({node("r", "root", nullptr), node("a", "ay", "missing")}), &message),
            ErrorCode::kValidationError);
  EXPECT_EQ(message.rfind("orphan", 0), 0u) << message;

  load_error(doc({node("r", "root", nullptr), node("s", "second", nullptr)}), &message);
  EXPECT_EQ(message.rfind("multiple roots", 0), 0u) << message;

  load_error(doc({node("r", "root", nullptr), node("a", "Part", "r"), node("b", "part", "r")}), &message);
  EXPECT_EQ(message.rfind("duplicate name", 0), 0u) << message;

  json labelled = node("b", "other", "r");
  labelled["label"] = "PART";
  load_error(doc({node("r", "root", nullptr), node("a", "part", "r"), labelled}), &message);
  EXPECT_EQ(message.rfind("duplicate name", 0), 0u) << message;

  load_error(doc({node("r", "root", nullptr), node("r", "again", nullptr)}), &message);
  EXPECT_EQ(message.rfind("duplicate id", 0), 0u) << message;

  const std::string long_description =
      "one two three four five six seven eight nine ten eleven twelve thirteen fourteen fifteen sixteen "
      "seventeen eighteen nineteen twenty twentyone twentytwo twentythree twentyfour twentyfive twentysix";
  load_error(doc({node("r", "root", nullptr, long_description)}), &message);
  EXPECT_EQ(message.rfind("description too long", 0), 0u) << message;

  json bad_radius = node("r", "root", nullptr);
  bad_radius["bounding_sphere"]["radius"] = 0.0;
  load_error(doc({bad_radius}), &message);
  EXPECT_EQ(message.rfind("bounding sphere", 0), 0u) << message;

  json bad_quat = node("r", "root", nullptr);
  bad_quat["instances"][0]["orientation"] = {1.0, 1.0, 0.0, 0.0};
  load_error(doc({bad_quat}), &message);
  EXPECT_EQ(message.rfind("orientation", 0), 0u) << message;
}

TEST(SceneTree, ExactlyTwentyFiveWordsIsAccepted) {
  const std::string words =
      "one two three four five six seven eight nine ten eleven twelve thirteen fourteen fifteen sixteen "
      "seventeen eighteen nineteen twenty twentyone twentytwo twentythree twentyfour twentyfive";
  EXPECT_NO_THROW(SceneTree::from_json(doc({node("r", "root", nullptr, words)})));
}

TEST(SceneTree, ParseErrors) {
  std::istringstream broken("{\"nodes\": [");
  EXPECT_THROW(
      {
        try {
          SceneTree::load(broken);
        } catch (const Error& e) {
          EXPECT_EQ(e.code(), ErrorCode::kParseError);
          throw;
        }
      },
      Error);
  EXPECT_EQ(load_error(json{{"model_name", "x"}}), ErrorCode::kParseError);
  EXPECT_EQ(load_error(doc({{{"name", "no id"}}})), ErrorCode::kParseError);
  EXPECT_THROW(SceneTree::load_file("/nonexistent/tree.json"), Error);
}

TEST(SceneTree, FindNode) {
  const auto tree = test::t4();
  EXPECT_EQ(tree->find_node("capsid proteins"), NodeId("gp23"));
  EXPECT_EQ(tree->find_node("Head"), NodeId("head"));
  EXPECT_EQ(tree->find_node("  HEAD "), NodeId("head"));
  EXPECT_EQ(tree->find_node("gp23"), NodeId("gp23"));  // label
  EXPECT_EQ(tree->find_node("mitochondria"), std::nullopt);
  EXPECT_EQ(tree->find_node(""), std::nullopt);
}

TEST(SceneTree, NameAndLabelLookupsAgree) {
  for (const auto& file : {"t4.json", "sars_cov_2.json", "hiv.json"}) {
    const auto tree = test::model(file);
    for (const auto& n : tree->nodes()) {
      EXPECT_EQ(tree->find_node(n.name), n.id);
      EXPECT_EQ(tree->find_node(n.label), n.id);
    }
    EXPECT_EQ(tree->name_index().size(), tree->size());
    EXPECT_EQ(tree->label_index().size(), tree->size());
  }
}

TEST(SceneTree, PathToRoot) {
  const auto tree = test::t4();
  EXPECT_EQ(test::names(*tree, tree->path_to_root(NodeId("hoc"))), (std::vector<std::string>{"HOC", "head", "T4"}));
  EXPECT_EQ(tree->path_to_root(tree->root_id()), std::vector<NodeId>{tree->root_id()});
  EXPECT_THROW(tree->path_to_root(NodeId("nope")), Error);
  EXPECT_TRUE(tree->is_ancestor(NodeId("head"), NodeId("hoc")));
  EXPECT_FALSE(tree->is_ancestor(NodeId("hoc"), NodeId("head")));
}

TEST(SceneTree, PathToRootMatchesParentWalkOnRandomTrees) {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 100; ++round) {
    const SceneTree tree = test::random_tree(rng, 1 + rng() % 12);
    for (const auto& n : tree.nodes()) {
      std::vector<NodeId> walk{n.id};
      for (auto p = n.parent_id; p; p = tree.node(*p).parent_id) walk.push_back(*p);
      EXPECT_EQ(tree.path_to_root(n.id), walk);
      EXPECT_EQ(tree.depth(n.id), walk.size() - 1);
    }
  }
}

TEST(SceneTree, SerializeRoundTrip) {
  for (const auto& file : {"t4.json", "sars_cov_2.json", "hiv.json"}) {
    const auto tree = test::model(file);
    const SceneTree again = SceneTree::from_json(json::parse(tree->to_json().dump()));
    EXPECT_TRUE(again == *tree) << file;
  }
}

TEST(SceneTree, DescriptionsFitTheWordLimit) {
  for (const auto& file : {"t4.json", "sars_cov_2.json", "hiv.json"}) {
    for (const auto& n : test::model(file)->nodes()) {
      std::istringstream words(n.description);
      std::size_t count = 0;
      for (std::string w; words >> w;) ++count;
      EXPECT_LE(count, kMaxDescriptionWords) << n.name;
      EXPECT_GT(count, 0u) << n.name;
    }
  }
}

}  // namespace
}  // namespace vizchat
