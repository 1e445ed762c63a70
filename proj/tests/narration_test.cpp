#include <gtest/gtest.h>

#include <set>

#include <nlohmann/json.hpp>

#include "test_support.hpp"
#include "vizchat/narrative/narration.hpp"

namespace vizchat {
namespace {

TEST(Narration, OptionPromptNamesBothOptions) {
  const NarrationTemplates templates = test::asset_narration();
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const std::string text = templates.generate("option-prompt", {.options = {"HOC", "capsid protein"}}, seed);
    EXPECT_NE(text.find("HOC or capsid protein"), std::string::npos) << text;
    EXPECT_EQ(text.find('{'), std::string::npos) << text;
  }
}

TEST(Narration, SameSeedSameText) {
  const NarrationTemplates templates = test::asset_narration();
  const NarrationPayload payload{.node = "head"};
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    EXPECT_EQ(templates.generate("transition", payload, seed), templates.generate("transition", payload, seed));
  }
}

TEST(Narration, EveryVariantIsReachable) {
  const NarrationTemplates templates = test::asset_narration();
  const NarrationPayload payload{.node = "head"};
  std::set<std::string> seen;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) seen.insert(templates.generate("transition", payload, seed));
  EXPECT_EQ(seen.size(), templates.templates("transition").size());
  EXPECT_EQ(seen.size(), 3u);
}

TEST(Narration, RequiredTypesPresentInAssets) {
  const NarrationTemplates templates = test::asset_narration();
  for (auto task : NarrationTemplates::required_task_types()) EXPECT_TRUE(templates.has(task)) << task;
}

TEST(Narration, UnknownTaskType) {
  const NarrationTemplates templates = test::asset_narration();
  EXPECT_EQ(test::error_of([&] { templates.generate("sing", {}, 1); }), ErrorCode::kUnknownTaskType);
}

TEST(Narration, MissingRequiredTypeIsRejected) {
  nlohmann::json doc = nlohmann::json::parse(test::read_file(test::asset("narration.json")));
  doc.erase("help");
  EXPECT_EQ(test::error_of([&] { NarrationTemplates::from_json(doc); }), ErrorCode::kValidationError);
  doc["help"] = nlohmann::json::array();
  EXPECT_EQ(test::error_of([&] { NarrationTemplates::from_json(doc); }), ErrorCode::kParseError);
}

TEST(Narration, JoinOptions) {
  EXPECT_EQ(join_options({}), "");
  EXPECT_EQ(join_options({"A"}), "A");
  EXPECT_EQ(join_options({"A", "B"}), "A or B");
  EXPECT_EQ(join_options({"A", "B", "C"}), "A, B or C");
}

TEST(Narration, FillSlots) {
  const NarrationPayload payload{.node = "tail", .options = {"x"}, .direction = "from above", .model = "T4"};
  EXPECT_EQ(fill_slots("{node}|{options}|{direction}|{model}|{node}", payload), "tail|x|from above|T4|tail");
}

}  // namespace
}  // namespace vizchat
