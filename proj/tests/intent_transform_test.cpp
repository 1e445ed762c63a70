#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "test_support.hpp"
#include "vizchat/dialogue/intent.hpp"
#include "vizchat/dialogue/transform.hpp"

namespace vizchat {
namespace {

TEST(IntentLabel, AcceptsLooseSpellings) {
  EXPECT_EQ(parse_intent_label("Pilot"), Intent::kPilot);
  EXPECT_EQ(parse_intent_label(" explorer\n"), Intent::kExplorer);
  EXPECT_EQ(parse_intent_label("Cutting Plane"), Intent::kCuttingPlane);
  EXPECT_EQ(parse_intent_label("CuttingPlane."), Intent::kCuttingPlane);
  EXPECT_EQ(parse_intent_label("ENCYCLOPEDIA"), Intent::kEncyclopedia);
  EXPECT_EQ(parse_intent_label("\"Guardian\""), Intent::kGuardian);
  for (auto bad : {"", "Pilot bot", "navigator", "Explorer or Pilot"}) {
    EXPECT_EQ(test::error_of([&] { parse_intent_label(bad); }), ErrorCode::kUnparseableReply) << bad;
  }
}

TEST(PilotDigit, OneToFour) {
  EXPECT_EQ(parse_pilot_digit("1"), PilotCommand::kNodeNavigation);
  EXPECT_EQ(parse_pilot_digit(" 2\n"), PilotCommand::kScaleChange);
  EXPECT_EQ(parse_pilot_digit("3."), PilotCommand::kReset);
  EXPECT_EQ(parse_pilot_digit("4"), PilotCommand::kReturnBack);
  for (auto bad : {"", "0", "5", "12", "one", "x1"}) {
    EXPECT_EQ(test::error_of([&] { parse_pilot_digit(bad); }), ErrorCode::kUnparseableReply) << bad;
  }
}

TEST(ScaleDirection, Words) {
  EXPECT_EQ(scale_direction_of("Go up a level."), ScaleDirection::kUp);
  EXPECT_EQ(scale_direction_of("Go down a level"), ScaleDirection::kDown);
  EXPECT_EQ(scale_direction_of("one level deeper"), ScaleDirection::kDown);
  EXPECT_EQ(scale_direction_of("change the level"), ScaleDirection::kUp);
}

TEST(PilotReply, MentionedStructureWins) {
  const auto tree = test::hiv();
  const NodeId capsid = test::id_of(*tree, "capsid");
  for (auto digit : {"1", "2", "3", "4"}) {
    const PilotIntent intent = interpret_pilot_reply(digit, "Go back to the Capsid", *tree);
    EXPECT_EQ(intent.command, PilotCommand::kNodeNavigation);
    EXPECT_EQ(intent.target, capsid);
  }
  EXPECT_EQ(interpret_pilot_reply("4", "Show me the last thing again.", *tree).command, PilotCommand::kReturnBack);
  EXPECT_EQ(test::error_of([&] { interpret_pilot_reply("1", "Take me to the moon", *tree); }),
            ErrorCode::kUnresolvedTarget);
  const PilotIntent down = interpret_pilot_reply("2", "Go down a level", *tree);
  EXPECT_EQ(down.command, PilotCommand::kScaleChange);
  EXPECT_EQ(down.direction, ScaleDirection::kDown);
}

TEST(Transform, ParsesTheLiteralForm) {
  EXPECT_EQ(parse_transform("{1,90,0,0}"), (Transform{1, 90, 0, 0}));
  EXPECT_EQ(parse_transform("  { 2 , 0,0 ,  0 } "), (Transform{2, 0, 0, 0}));
  EXPECT_EQ(parse_transform("Sure: {0.5,-45,+10,1e1} ok"), (Transform{0.5, -45, 10, 10}));
  EXPECT_TRUE(parse_transform("{1,0,0,0}").is_identity());
  EXPECT_EQ(parse_transform("{1,2,3,4} then {9,9,9,9}"), (Transform{1, 2, 3, 4}));
}

TEST(Transform, RejectsMalformedReplies) {
  for (auto bad : {"", "1,90,0,0", "{1,90,0}", "{1,90,0,0,0}", "{1,a,0,0}", "{1,,0,0}", "{1 90 0 0}",
                   "{1,90,0,0", "{inf,0,0,0}", "{nan,0,0,0}", "{1,90deg,0,0}"}) {
    EXPECT_EQ(test::error_of([&] { parse_transform(bad); }), ErrorCode::kMalformedTransform) << bad;
  }
  EXPECT_EQ(test::error_of([&] { parse_transform("{0,0,0,0}"); }), ErrorCode::kNonPositiveZoom);
  EXPECT_EQ(test::error_of([&] { parse_transform("{-2,0,0,0}"); }), ErrorCode::kNonPositiveZoom);
}

TEST(Transform, FormatParseRoundTrip) {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> zoom(1e-3, 1e3);
  std::uniform_real_distribution<double> angle(-720, 720);
  for (int i = 0; i < 2000; ++i) {
    const Transform t{zoom(rng), angle(rng), angle(rng), i % 3 == 0 ? 0.0 : angle(rng)};
    const std::string text = format_transform(t);
    const Transform back = parse_transform(text);
    EXPECT_EQ(back, t) << text;
    EXPECT_EQ(format_transform(back), text);
  }
  EXPECT_EQ(format_transform({1, 90, 0, 0}), "{1,90,0,0}");
  EXPECT_EQ(format_transform({2, 0, 0, 0}), "{2,0,0,0}");
}

}  // namespace
}  // namespace vizchat
