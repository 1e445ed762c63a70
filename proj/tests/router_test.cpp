#include <gtest/gtest.h>

#include <atomic>
#include <chrono>
#include <thread>

#include "test_support.hpp"
#include "vizchat/dialogue/router.hpp"

namespace vizchat {
namespace {

using namespace std::chrono_literals;

struct Row {
  const char* query;
  Intent intent;
};

TEST(Router, ExampleTableUnderMockBackend) {
  const auto router = test::mock_router();
  const auto tree = test::hiv();
  const RoutingContext context{tree};
  const Row rows[] = {
      {"I want to see the right side of this object.", Intent::kExplorer},
      {"It's too far. I want it up close.", Intent::kExplorer},
      {"Show me the capsid.", Intent::kPilot},
      {"Go back to the start.", Intent::kPilot},
      {"Go up a level.", Intent::kPilot},
      {"Show me the last thing again.", Intent::kPilot},
      {"What is the matrix protein?", Intent::kEncyclopedia},
      {"Please play music for me.", Intent::kGuardian},
      {"Please show me the interior objects.", Intent::kCuttingPlane},
  };
  for (const auto& row : rows) {
    const RoutedQuery routed = router->route(row.query, context);
    EXPECT_FALSE(routed.failure) << row.query << ": " << routed.failure->message;
    EXPECT_EQ(routed.intent, row.intent) << row.query;
  }

  EXPECT_EQ(router->route(rows[0].query, context).transform, (Transform{1, 90, 0, 0}));
  EXPECT_EQ(router->route(rows[1].query, context).transform, (Transform{2, 0, 0, 0}));

  const auto pilot = [&](const char* q) { return router->route(q, context).pilot.value(); };
  EXPECT_EQ(pilot("Show me the capsid."),
            (PilotIntent{PilotCommand::kNodeNavigation, test::id_of(*tree, "capsid"), ScaleDirection::kUp}));
  EXPECT_EQ(pilot("Go back to the start.").command, PilotCommand::kReset);
  EXPECT_EQ(pilot("Go up a level.").command, PilotCommand::kScaleChange);
  EXPECT_EQ(pilot("Go up a level.").direction, ScaleDirection::kUp);
  EXPECT_EQ(pilot("Show me the last thing again.").command, PilotCommand::kReturnBack);
  EXPECT_FALSE(router->route("What is the matrix protein?", context).reply.empty());
}

TEST(Router, GoBackToANamedStructureNavigates) {
  const auto router = test::mock_router();
  const auto tree = test::hiv();
  const RoutedQuery routed = router->route("Go back to the Capsid", RoutingContext{tree});
  ASSERT_EQ(routed.intent, Intent::kPilot);
  EXPECT_EQ(routed.pilot->command, PilotCommand::kNodeNavigation);
  EXPECT_EQ(routed.pilot->target, test::id_of(*tree, "capsid"));

  SessionState session(tree);
  router->process_query("Show me the matrix protein", session);
  const QueryResult result = router->process_query("Go back to the Capsid", session);
  EXPECT_EQ(session.view().current_node, test::id_of(*tree, "capsid"));
  EXPECT_EQ(result.pilot->command, PilotCommand::kNodeNavigation);
}

TEST(Router, PilotQueriesMoveTheView) {
  const auto router = test::mock_router();
  const auto tree = test::hiv();
  SessionState session(tree);
  const QueryResult shown = router->process_query("Show me the capsid.", session);
  EXPECT_EQ(shown.intent, Intent::kPilot);
  EXPECT_FALSE(shown.error);
  EXPECT_FALSE(shown.narration.empty());
  ASSERT_EQ(shown.scenes.size(), 1u);
  EXPECT_FALSE(shown.scenes.front().animation.empty());
  EXPECT_EQ(session.view().current_node, test::id_of(*tree, "capsid"));

  router->process_query("Go up a level.", session);
  EXPECT_EQ(session.view().current_node, tree->root_id());
  router->process_query("Show me the last thing again.", session);
  EXPECT_EQ(session.view().current_node, test::id_of(*tree, "capsid"));
  router->process_query("Go back to the start.", session);
  EXPECT_EQ(session.view(), SessionState::default_view(*tree));
}

TEST(Router, CuttingPlaneGoesStraightToTheView) {
  const auto router = test::mock_router();
  SessionState session(test::t4());
  router->process_query("Show me the head", session);
  const QueryResult result = router->process_query("Please show me the interior objects.", session);
  EXPECT_EQ(result.intent, Intent::kCuttingPlane);
  EXPECT_TRUE(session.view().plane.enabled);
  EXPECT_EQ(session.view().highlights, session.tree().node(NodeId("head")).child_ids);
  ASSERT_EQ(result.scenes.size(), 1u);
  EXPECT_EQ(result.scenes.front().kind, SceneKind::kCuttingPlane);
}

TEST(Router, ExplorerRotatesTheCamera) {
  const auto router = test::mock_router();
  SessionState session(test::t4());
  const QueryResult result = router->process_query("I want to see the right side of this object.", session);
  EXPECT_EQ(result.transform, (Transform{1, 90, 0, 0}));
  EXPECT_LT((session.view().camera.view_direction() - Eigen::Vector3d(-1, 0, 0)).norm(), 1e-9);
}

TEST(Router, PilotFailuresAreNarratedAndLeaveTheViewAlone) {
  const auto router = test::mock_router();
  SessionState session(test::t4());
  const ViewState start = session.view();
  const QueryResult up = router->process_query("Go up a level.", session);
  EXPECT_EQ(up.error, ErrorCode::kAtRoot);
  EXPECT_FALSE(up.narration.empty());
  EXPECT_EQ(session.view(), start);
  EXPECT_TRUE(session.history().empty());

  const QueryResult back = router->process_query("Show me the last thing again.", session);
  EXPECT_EQ(back.error, ErrorCode::kEmptyHistory);
  EXPECT_EQ(session.view(), start);
}

// Each role replies with junk unless it is the one under test.
BotBackends poisoned(BotRole honest, std::atomic<int>* calls) {
  BotBackends backends = make_mock_backends({.canned = test::asset_answers()});
  for (BotRole role : kAllBotRoles) {
    if (role == BotRole::kManager || role == honest) continue;
    if (honest == BotRole::kEncyclopediaConcise && role == BotRole::kEncyclopediaDetailed) continue;
    backends[role] = std::make_shared<ScriptedBackend>([calls, role](const std::string&, const std::vector<ChatMessage>&) {
      ++*calls;
      if (role == BotRole::kExplorer) return std::string("{0.001,180,180,180}");
      if (role == BotRole::kPilot) return std::string("3");
      throw std::runtime_error("poison");
    });
  }
  return backends;
}

TEST(Router, DiscardedRepliesNeverTouchTheSession) {
  struct Case {
    const char* query;
    BotRole honest;
  };
  const Case cases[] = {
      {"Show me the head", BotRole::kPilot},
      {"I want to see the right side of this object.", BotRole::kExplorer},
      {"Please show me the interior objects.", BotRole::kManager},
      {"What is the head?", BotRole::kEncyclopediaConcise},
      {"Please play music for me.", BotRole::kGuardian},
  };
  const auto clean = test::mock_router();
  for (const auto& c : cases) {
    std::atomic<int> calls{0};
    const auto dirty = test::router_with(poisoned(c.honest, &calls));
    SessionState a(test::t4(), 1);
    SessionState b(test::t4(), 1);
    clean->process_query("Show me the tail", a);
    dirty->process_query("Show me the tail", b);
    const QueryResult ra = clean->process_query(c.query, a);
    const QueryResult rb = dirty->process_query(c.query, b);
    EXPECT_EQ(a.view(), b.view()) << c.query;
    EXPECT_EQ(a.history(), b.history()) << c.query;
    EXPECT_EQ(ra.narration, rb.narration) << c.query;
    EXPECT_FALSE(rb.error) << c.query;
    EXPECT_GT(calls.load(), 0) << c.query;
  }
}

TEST(Router, BotsRunConcurrently) {
  const auto router = test::mock_router(100ms);
  const auto tree = test::t4();
  const char* queries[] = {"Show me the head", "I want to see the right side of this object.",
                           "What is the head?", "Please play music for me.", "Please show me the interior objects."};
  for (int i = 0; i < 20; ++i) {
    SessionState session(tree);
    const auto start = std::chrono::steady_clock::now();
    const QueryResult result = router->process_query(queries[i % 5], session);
    const auto elapsed = std::chrono::steady_clock::now() - start;
    EXPECT_FALSE(result.error);
    EXPECT_GE(elapsed, 100ms);
    EXPECT_LT(elapsed, 200ms) << queries[i % 5];
  }
}

TEST(Router, TwoStageEncyclopedia) {
  const auto router = test::mock_router();
  const auto answers = test::asset_answers();
  const CannedAnswer& canned = answers.at(normalize_question("What is the head?"));
  SessionState session(test::t4());

  const QueryResult first = router->process_query("What is the head?", session);
  EXPECT_EQ(first.intent, Intent::kEncyclopedia);
  EXPECT_TRUE(first.awaiting_detail);
  EXPECT_EQ(first.narration.rfind(canned.concise, 0), 0u) << first.narration;
  EXPECT_EQ(first.narration.find(canned.detailed), std::string::npos);
  EXPECT_EQ(test::names(session.tree(), first.options), (std::vector<std::string>{"HOC", "capsid protein"}));

  const QueryResult second = router->process_query("Yes please", session);
  EXPECT_FALSE(second.awaiting_detail);
  EXPECT_FALSE(session.awaiting_detail());
  EXPECT_EQ(second.narration.rfind(canned.detailed, 0), 0u) << second.narration;
  EXPECT_EQ(second.scenes.size(), 0u);
  // Options survive the detour.
  EXPECT_EQ(second.options, first.options);

  const QueryResult third = router->process_query("yes", session);
  EXPECT_NE(third.intent, Intent::kEncyclopedia);
}

TEST(Router, EncyclopediaQueryReturnsConciseFirst) {
  BotBackends backends = make_mock_backends();
  backends[BotRole::kEncyclopediaConcise] =
      std::make_shared<ScriptedBackend>([](auto&, auto&) { return std::string("A"); });
  backends[BotRole::kEncyclopediaDetailed] =
      std::make_shared<ScriptedBackend>([](auto&, auto&) { return std::string("B"); }, 300ms);
  const auto router = test::router_with(backends);
  std::shared_future<std::string> detailed;
  const auto start = std::chrono::steady_clock::now();
  const EncyclopediaAnswer answer = router->encyclopedia_query("What is it?", *test::t4(), &detailed);
  EXPECT_LT(std::chrono::steady_clock::now() - start, 250ms);
  EXPECT_EQ(answer.concise, "A");
  EXPECT_TRUE(answer.detailed.empty());
  EXPECT_TRUE(answer.awaiting_detail);
  EXPECT_EQ(detailed.get(), "B");
}

TEST(Router, DeclineDropsTheDetail) {
  const auto router = test::mock_router();
  SessionState session(test::t4());
  router->process_query("What is the head?", session);
  const QueryResult no = router->process_query("No thanks", session);
  EXPECT_FALSE(no.awaiting_detail);
  EXPECT_TRUE(session.exploration().active());
}

TEST(Router, NewIntentEndsTheExploration) {
  const auto router = test::mock_router();
  SessionState session(test::t4());
  router->process_query("What is the head?", session);
  ASSERT_TRUE(session.exploration().active());
  const QueryResult moved = router->process_query("Show me the tail", session);
  EXPECT_FALSE(session.exploration().active());
  EXPECT_FALSE(session.awaiting_detail());
  EXPECT_TRUE(moved.options.empty());
}

TEST(Router, SelectOptionFollowsTheBranch) {
  const auto router = test::mock_router();
  SessionState session(test::t4());
  router->process_query("What is the head?", session);
  const QueryResult picked = router->select_option(0, session);
  ASSERT_EQ(picked.scenes.size(), 1u);
  EXPECT_EQ(picked.scenes.front().target_node_id, NodeId("hoc"));
  EXPECT_EQ(picked.scenes.front().kind, SceneKind::kFocus);
  EXPECT_NE(picked.narration.find(session.tree().node(NodeId("hoc")).description), std::string::npos);
  EXPECT_EQ(test::error_of([&] { router->select_option(5, session); }), ErrorCode::kIndexOutOfRange);

  SessionState idle(test::t4());
  EXPECT_EQ(test::error_of([&] { router->select_option(0, idle); }), ErrorCode::kNoPendingOptions);
}

TEST(Router, ShowMeMoreAndStop) {
  const auto router = test::mock_router();
  SessionState session(test::t4());
  const QueryResult first = router->process_query("What is the head?", session);
  router->process_query("no", session);
  const QueryResult more = router->process_query("Show me more", session);
  for (const auto& id : more.options) {
    EXPECT_EQ(std::find(first.options.begin(), first.options.end(), id), first.options.end());
  }
  if (session.exploration().active()) {
    router->process_query("stop", session);
    EXPECT_FALSE(session.exploration().active());
  }
}

TEST(Router, GuardianMentionsTheModel) {
  const auto router = test::mock_router();
  const char* off_topic[] = {
      "Please play music for me.", "Tell me a joke", "What's the weather like today",
      "Who won the football game", "Order me a pizza", "Sing a song", "Book a flight to Paris",
      "What time is it", "Recommend a movie", "How do I bake bread",
      "Translate hello into French", "What's your favourite colour", "Set an alarm",
      "Play some jazz", "Call my mother", "Write me a poem", "Who is the president",
      "Let's play chess", "Turn on the lights in the kitchen please", "What's the capital of Peru",
  };
  for (const auto& file : {"t4.json", "hiv.json"}) {
    const auto tree = test::model(file);
    SessionState session(tree);
    int mentions = 0;
    for (const char* q : off_topic) {
      const QueryResult result = router->process_query(q, session);
      EXPECT_EQ(result.intent, Intent::kGuardian) << q;
      mentions += result.narration.find(tree->model_name()) != std::string::npos;
    }
    EXPECT_EQ(mentions, 20) << file;
    EXPECT_EQ(session.view(), SessionState::default_view(*tree));
  }
}

TEST(Router, GuardianRepliesToAnEmptyQuery) {
  const auto router = test::mock_router();
  const auto tree = test::t4();
  const RoutedQuery routed = router->route("", RoutingContext{tree});
  EXPECT_EQ(routed.intent, Intent::kGuardian);
  EXPECT_FALSE(routed.reply.empty());
}

TEST(Router, BackendFailureApologisesWithoutSideEffects) {
  BotBackends backends = make_mock_backends();
  backends[BotRole::kManager] = std::make_shared<ScriptedBackend>(
      [](auto&, auto&) -> std::string { throw Error(ErrorCode::kBackendUnavailable, "down"); });
  const auto router = test::router_with(backends);
  SessionState session(test::t4());
  const ViewState start = session.view();
  const QueryResult result = router->process_query("Show me the head", session);
  EXPECT_EQ(result.error, ErrorCode::kBackendUnavailable);
  EXPECT_FALSE(result.narration.empty());
  EXPECT_EQ(session.view(), start);
  EXPECT_TRUE(session.history().empty());
}

TEST(Router, SlowManagerTimesOut) {
  BotBackends backends = make_mock_backends();
  backends[BotRole::kManager] =
      std::make_shared<ScriptedBackend>([](auto&, auto&) { return std::string("Pilot"); }, 300ms, 50ms);
  const auto router = test::router_with(backends);
  SessionState session(test::t4());
  EXPECT_EQ(router->process_query("Show me the head", session).error, ErrorCode::kBackendUnavailable);
}

TEST(Router, UnparseableManagerReply) {
  BotBackends backends = make_mock_backends();
  backends[BotRole::kManager] = std::make_shared<ScriptedBackend>([](auto&, auto&) { return std::string("Dunno"); });
  const auto router = test::router_with(backends);
  SessionState session(test::t4());
  EXPECT_EQ(router->process_query("Show me the head", session).error, ErrorCode::kUnparseableReply);
  EXPECT_EQ(session.view(), SessionState::default_view(session.tree()));
}

TEST(Router, HelpChangesNothingVisual) {
  const auto router = test::mock_router();
  SessionState session(test::t4());
  router->process_query("Show me the tail", session);
  const ViewState before = session.view();
  const QueryResult help = router->process_query("Help", session);
  EXPECT_TRUE(help.help);
  EXPECT_FALSE(help.intent);
  EXPECT_FALSE(help.narration.empty());
  EXPECT_EQ(session.view(), before);
}

TEST(Router, SameInputsSameResult) {
  const auto router = test::mock_router();
  const char* script[] = {"What is the head?", "yes", "Show me the tail", "Go up a level.",
                          "I want to see the right side of this object.", "Please show me the interior objects.",
                          "Please play music for me."};
  SessionState a(test::t4(), 42);
  SessionState b(test::t4(), 42);
  for (const char* q : script) {
    const QueryResult ra = router->process_query(q, a);
    const QueryResult rb = router->process_query(q, b);
    EXPECT_EQ(ra.narration, rb.narration) << q;
    EXPECT_EQ(ra.intent, rb.intent) << q;
    EXPECT_EQ(ra.options, rb.options) << q;
    EXPECT_EQ(a.view(), b.view()) << q;
  }
}

TEST(Router, ControlPhrasesNeedTheirContext) {
  const auto tree = test::t4();
  EXPECT_EQ(detect_control("yes", RoutingContext{tree}), ControlKind::kNone);
  EXPECT_EQ(detect_control("Yes!", RoutingContext{tree, true}), ControlKind::kAffirmDetail);
  EXPECT_EQ(detect_control("show me more", RoutingContext{tree, false, true}), ControlKind::kMoreOptions);
  EXPECT_EQ(detect_control("show me more", RoutingContext{tree}), ControlKind::kNone);
  EXPECT_EQ(detect_control("help", RoutingContext{tree}), ControlKind::kHelp);
}

}  // namespace
}  // namespace vizchat
