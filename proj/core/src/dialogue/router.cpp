#include "vizchat/dialogue/router.hpp"

#include <array>
#include <chrono>
#include <exception>
#include <utility>

#include <boost/asio/post.hpp>
#include <boost/asio/thread_pool.hpp>

#include "vizchat/narrative/node_sorting.hpp"

namespace vizchat {
namespace {

using Reply = std::shared_future<std::string>;

constexpr std::array<std::string_view, 6> kHelpPhrases = {
    "help", "help me", "what can i do", "what can i say", "what can you do", "how does this work",
};
constexpr std::array<std::string_view, 11> kAffirmPhrases = {
    "yes", "yes please", "yeah", "sure", "ok", "okay", "please", "tell me more", "more", "go on", "go ahead",
};
constexpr std::array<std::string_view, 6> kDeclinePhrases = {
    "no", "no thanks", "no thank you", "nope", "not now", "skip it",
};
constexpr std::array<std::string_view, 7> kStopPhrases = {
    "stop", "that's enough", "thats enough", "enough", "i'm done", "im done", "done",
};
constexpr std::array<std::string_view, 6> kMorePhrases = {
    "show me more", "more options", "next", "something else", "other options", "show me something else",
};

template <std::size_t N>
bool one_of(std::string_view text, const std::array<std::string_view, N>& phrases) {
  for (auto phrase : phrases) {
    if (text == phrase) return true;
  }
  return false;
}

std::string describe(const Transform& t) {
  std::vector<std::string> parts;
  if (t.zoom_factor > 1.0) parts.emplace_back("closer");
  if (t.zoom_factor < 1.0) parts.emplace_back("further out");
  if (t.yaw > 0.0) parts.emplace_back("round to the right");
  if (t.yaw < 0.0) parts.emplace_back("round to the left");
  if (t.pitch < 0.0) parts.emplace_back("from above");
  if (t.pitch > 0.0) parts.emplace_back("from below");
  if (t.roll != 0.0) parts.emplace_back("tilted");
  if (parts.empty()) return "as it is";
  std::string out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) out += (i + 1 == parts.size() ? " and " : ", ") + parts[i];
  return out;
}

std::string fallback_template(std::string_view task_type) {
  if (task_type == "apology") return "Sorry, I could not work that out just now. Could you say it another way?";
  if (task_type == "not-found") return "I could not find that part of the {model}.";
  if (task_type == "at-root") return "We are already looking at the whole {model}.";
  if (task_type == "no-children") return "The {node} has no smaller parts to show.";
  if (task_type == "cannot-go-back") return "There is nothing to go back to yet.";
  if (task_type == "exploration-end") return "That covers the parts I mentioned. Ask me anything else about the {model}.";
  if (task_type == "detail-decline") return "All right. What would you like to see next?";
  return {};
}

std::string_view error_task(ErrorCode code) {
  switch (code) {
    case ErrorCode::kAtRoot: return "at-root";
    case ErrorCode::kNoChildren: return "no-children";
    case ErrorCode::kEmptyHistory: return "cannot-go-back";
    case ErrorCode::kUnresolvedTarget:
    case ErrorCode::kUnknownNode: return "not-found";
    default: return "apology";
  }
}

std::string join_speech(std::string a, std::string_view b) {
  if (b.empty()) return a;
  if (!a.empty()) a += ' ';
  a += b;
  return a;
}

}  // namespace

struct DialogueRouter::Impl {
  BotBackends backends;
  PromptSet prompts;
  NarrationTemplates narration;
  boost::asio::thread_pool pool;

  Impl(BotBackends b, PromptSet p, NarrationTemplates n, std::size_t threads)
      : backends(std::move(b)), prompts(std::move(p)), narration(std::move(n)), pool(threads) {}

  BotBackend& backend(BotRole role) const {
    auto it = backends.find(role);
    if (it == backends.end() || !it->second) {
      throw Error(ErrorCode::kBackendUnavailable, "no backend for " + std::string(to_string(role)));
    }
    return *it->second;
  }

  Reply submit(BotRole role, std::string system_prompt, std::string query) {
    auto it = backends.find(role);
    std::shared_ptr<BotBackend> bot = it == backends.end() ? nullptr : it->second;
    auto task = std::make_shared<std::packaged_task<std::string()>>(
        [bot, role, system_prompt = std::move(system_prompt), query = std::move(query)] {
          if (!bot) throw Error(ErrorCode::kBackendUnavailable, "no backend for " + std::string(to_string(role)));
          return bot->complete(system_prompt, {ChatMessage{"user", query}});
        });
    Reply reply = task->get_future().share();
    boost::asio::post(pool, [task] { (*task)(); });
    return reply;
  }

  std::string await(BotRole role, const Reply& reply) const {
    auto it = backends.find(role);
    const auto budget = it != backends.end() && it->second ? it->second->budget() : std::chrono::milliseconds{0};
    return await(reply, budget, to_string(role));
  }

  static std::string await(const Reply& reply, std::chrono::milliseconds budget, std::string_view who) {
    if (reply.wait_for(budget) != std::future_status::ready) {
      throw Error(ErrorCode::kBackendUnavailable, std::string(who) + " did not reply in time");
    }
    try {
      return reply.get();
    } catch (const Error&) {
      throw;
    } catch (const std::exception& e) {
      throw Error(ErrorCode::kBackendUnavailable, std::string(who) + ": " + e.what());
    }
  }

  std::string say(std::string_view task, NarrationPayload payload, SessionState& session) const {
    if (payload.model.empty()) payload.model = session.tree().model_name();
    const std::uint64_t seed = session.next_narration_seed();
    if (narration.has(task)) return narration.generate(task, payload, seed);
    return fill_slots(fallback_template(task), payload);
  }
};

BotBackends make_mock_backends(const MockOptions& options) {
  BotBackends backends;
  for (BotRole role : kAllBotRoles) backends.emplace(role, std::make_shared<MockBot>(role, options));
  return backends;
}

Intent classify_intent(std::string_view query, BotBackend& backend, const std::string& system_prompt) {
  return parse_intent_label(backend.complete(system_prompt, {ChatMessage{"user", std::string(query)}}));
}

PilotIntent interpret_pilot_reply(std::string_view reply, std::string_view query, const SceneTree& tree) {
  PilotIntent intent;
  if (auto named = select_focus_node(query, tree)) {
    intent.command = PilotCommand::kNodeNavigation;
    intent.target = std::move(named);
    return intent;
  }
  intent.command = parse_pilot_digit(reply);
  switch (intent.command) {
    case PilotCommand::kNodeNavigation:
      throw Error(ErrorCode::kUnresolvedTarget, "no known structure named in '" + std::string(query) + "'");
    case PilotCommand::kScaleChange:
      intent.direction = scale_direction_of(query);
      break;
    case PilotCommand::kReset:
    case PilotCommand::kReturnBack:
      break;
  }
  return intent;
}

PilotIntent classify_pilot(std::string_view query, const SceneTree& tree, BotBackend& backend,
                           const std::string& system_prompt) {
  return interpret_pilot_reply(backend.complete(system_prompt, {ChatMessage{"user", std::string(query)}}), query,
                               tree);
}

Transform extract_transform(std::string_view query, BotBackend& backend, const std::string& system_prompt) {
  return parse_transform(backend.complete(system_prompt, {ChatMessage{"user", std::string(query)}}));
}

std::string guardian_reply(std::string_view query, BotBackend& backend, const std::string& system_prompt) {
  return backend.complete(system_prompt, {ChatMessage{"user", std::string(query)}});
}

RoutingContext context_of(const SessionState& session) {
  RoutingContext context;
  context.tree = session.tree_ptr();
  context.awaiting_detail = session.awaiting_detail();
  context.exploring = session.exploration().active();
  return context;
}

ControlKind detect_control(std::string_view query, const RoutingContext& context) {
  const std::string q = normalize_question(query);
  if (one_of(q, kHelpPhrases)) return ControlKind::kHelp;
  if (context.awaiting_detail) {
    if (one_of(q, kAffirmPhrases)) return ControlKind::kAffirmDetail;
    if (one_of(q, kDeclinePhrases)) return ControlKind::kDeclineDetail;
  }
  if (context.exploring) {
    if (one_of(q, kStopPhrases)) return ControlKind::kStopExploration;
    if (one_of(q, kMorePhrases)) return ControlKind::kMoreOptions;
  }
  return ControlKind::kNone;
}

DialogueRouter::DialogueRouter(BotBackends backends, PromptSet prompts, NarrationTemplates narration,
                               std::size_t worker_threads)
    : impl_(std::make_unique<Impl>(std::move(backends), std::move(prompts), std::move(narration),
                                   worker_threads == 0 ? 1 : worker_threads)) {}

DialogueRouter::~DialogueRouter() {
  impl_->pool.stop();
  impl_->pool.join();
}

const PromptSet& DialogueRouter::prompts() const noexcept { return impl_->prompts; }
const NarrationTemplates& DialogueRouter::narration() const noexcept { return impl_->narration; }

PromptContext DialogueRouter::prompt_context(const SceneTree& tree) const {
  PromptContext context;
  context.model_name = tree.model_name();
  for (const auto& node : tree.nodes()) context.node_names.push_back(node.name);
  return context;
}

EncyclopediaAnswer DialogueRouter::encyclopedia_query(std::string_view query, const SceneTree& tree,
                                                      std::shared_future<std::string>* detailed) const {
  const PromptContext context = prompt_context(tree);
  const std::string q(query);
  Reply concise = impl_->submit(BotRole::kEncyclopediaConcise,
                                impl_->prompts.render(BotRole::kEncyclopediaConcise, context), q);
  Reply detail = impl_->submit(BotRole::kEncyclopediaDetailed,
                               impl_->prompts.render(BotRole::kEncyclopediaDetailed, context), q);
  EncyclopediaAnswer answer;
  try {
    answer.concise = impl_->await(BotRole::kEncyclopediaConcise, concise);
    answer.awaiting_detail = true;
    if (detailed) *detailed = detail;
  } catch (const Error&) {
    // The detailed segment stands in for a missing concise one.
    answer.concise = impl_->await(BotRole::kEncyclopediaDetailed, detail);
  }
  return answer;
}

RoutedQuery DialogueRouter::route(std::string_view query, const RoutingContext& context) const {
  RoutedQuery routed;
  routed.query = std::string(query);
  routed.control = detect_control(query, context);
  if (routed.control != ControlKind::kNone) return routed;
  if (!context.tree) throw Error(ErrorCode::kBadRequest, "routing context has no scene tree");
  const SceneTree& tree = *context.tree;

  const PromptContext prompt_context = this->prompt_context(tree);
  std::map<BotRole, Reply> replies;
  for (BotRole role : kAllBotRoles) {
    replies.emplace(role, impl_->submit(role, impl_->prompts.render(role, prompt_context), routed.query));
  }

  try {
    routed.intent = parse_intent_label(impl_->await(BotRole::kManager, replies.at(BotRole::kManager)));
    switch (*routed.intent) {
      case Intent::kPilot:
        routed.pilot = interpret_pilot_reply(impl_->await(BotRole::kPilot, replies.at(BotRole::kPilot)),
                                             routed.query, tree);
        break;
      case Intent::kExplorer:
        routed.transform = parse_transform(impl_->await(BotRole::kExplorer, replies.at(BotRole::kExplorer)));
        break;
      case Intent::kCuttingPlane:
        break;
      case Intent::kEncyclopedia:
        try {
          routed.reply = impl_->await(BotRole::kEncyclopediaConcise, replies.at(BotRole::kEncyclopediaConcise));
          routed.detailed = replies.at(BotRole::kEncyclopediaDetailed);
        } catch (const Error&) {
          routed.reply = impl_->await(BotRole::kEncyclopediaDetailed, replies.at(BotRole::kEncyclopediaDetailed));
        }
        break;
      case Intent::kGuardian:
        routed.reply = impl_->await(BotRole::kGuardian, replies.at(BotRole::kGuardian));
        break;
    }
  } catch (const Error& e) {
    routed.failure = RouteFailure{e.code(), e.what()};
  }
  return routed;
}

QueryResult DialogueRouter::apply(const RoutedQuery& routed, SessionState& session) const {
  QueryResult result;
  result.intent = routed.intent;
  result.pilot = routed.pilot;
  result.transform = routed.transform;
  session.conversation().push_back({"user", routed.query});

  const SceneTree& tree = session.tree();
  const auto option_prompt = [&]() -> std::string {
    const auto& plan = session.exploration();
    if (!plan.active() || plan.options().empty()) return {};
    NarrationPayload payload;
    for (const auto& id : plan.options()) payload.options.push_back(tree.node(id).name);
    return impl_->say("option-prompt", payload, session);
  };
  const auto narrate = [&](std::string text) {
    result.narration = text;
    session.enqueue(build_scene(SceneKind::kSpeechOnly, std::nullopt, tree, session.view().camera, std::move(text)));
  };
  const auto current_name = [&] { return tree.node(session.view().current_node).name; };

  switch (routed.control) {
    case ControlKind::kHelp:
      result.help = true;
      narrate(impl_->say("help", {}, session));
      break;
    case ControlKind::kAffirmDetail: {
      auto pending = session.take_pending_detail();
      std::string text;
      try {
        if (!pending) throw Error(ErrorCode::kBackendUnavailable, "no detail pending");
        text = Impl::await(*pending, impl_->backend(BotRole::kEncyclopediaDetailed).budget(), "encyclopedia");
      } catch (const Error& e) {
        result.error = e.code();
        text = impl_->say("apology", {}, session);
      }
      narrate(join_speech(std::move(text), option_prompt()));
      break;
    }
    case ControlKind::kDeclineDetail:
      session.take_pending_detail();
      narrate(join_speech(impl_->say("detail-decline", {}, session), option_prompt()));
      break;
    case ControlKind::kStopExploration:
      session.end_exploration();
      session.take_pending_detail();
      narrate(impl_->say("exploration-end", {}, session));
      break;
    case ControlKind::kMoreOptions:
      session.skip_options();
      narrate(session.exploration().active() ? option_prompt() : impl_->say("exploration-end", {}, session));
      break;
    case ControlKind::kNone:
      break;
  }

  if (routed.control == ControlKind::kNone) {
    if (routed.failure) {
      result.error = routed.failure->code;
      NarrationPayload payload;
      if (routed.failure->code == ErrorCode::kNoChildren) payload.node = current_name();
      narrate(impl_->say(error_task(routed.failure->code), payload, session));
    } else if (routed.intent) {
      const Intent intent = *routed.intent;
      if (intent != Intent::kGuardian) {
        session.take_pending_detail();
        session.end_exploration();
      }
      try {
        switch (intent) {
          case Intent::kPilot: {
            const PilotIntent& pilot = *routed.pilot;
            AnimationSpec spec;
            NarrationPayload payload;
            switch (pilot.command) {
              case PilotCommand::kNodeNavigation: spec = session.fly_to(*pilot.target); break;
              case PilotCommand::kScaleChange:
                spec = session.change_scale(pilot.direction);
                payload.direction = pilot.direction == ScaleDirection::kUp ? "up" : "down";
                break;
              case PilotCommand::kReset: spec = session.reset(); break;
              case PilotCommand::kReturnBack: spec = session.return_back(); break;
            }
            payload.node = current_name();
            Scene scene;
            scene.kind = SceneKind::kOverview;
            scene.target_node_id = session.view().current_node;
            scene.speech = impl_->say("pilot-ack", payload, session);
            scene.animation = std::move(spec);
            scene.state_applied = true;
            result.narration = scene.speech;
            result.scenes.push_back(scene);
            session.interrupt(std::move(scene));
            break;
          }
          case Intent::kExplorer: {
            NarrationPayload payload;
            payload.direction = describe(*routed.transform);
            payload.node = current_name();
            Scene scene;
            scene.kind = SceneKind::kSpeechOnly;
            scene.speech = impl_->say("explorer-ack", payload, session);
            scene.animation = session.explore(*routed.transform);
            scene.state_applied = true;
            result.narration = scene.speech;
            result.scenes.push_back(scene);
            session.interrupt(std::move(scene));
            break;
          }
          case Intent::kCuttingPlane: {
            NarrationPayload payload;
            payload.node = current_name();
            Scene scene;
            scene.kind = SceneKind::kCuttingPlane;
            scene.target_node_id = session.view().current_node;
            scene.speech = impl_->say("cutting-ack", payload, session);
            scene.animation = session.set_cutting_plane();
            scene.state_applied = true;
            result.narration = scene.speech;
            result.scenes.push_back(scene);
            session.interrupt(std::move(scene));
            break;
          }
          case Intent::kEncyclopedia: {
            result.scenes.push_back(session.begin_exploration(routed.query, routed.reply));
            if (routed.detailed) session.set_pending_detail(*routed.detailed);
            std::string prompts;
            if (session.awaiting_detail()) prompts = impl_->say("detail-prompt", {}, session);
            prompts = join_speech(std::move(prompts), option_prompt());
            result.narration = join_speech(routed.reply, prompts);
            if (!prompts.empty()) {
              session.enqueue(
                  build_scene(SceneKind::kSpeechOnly, std::nullopt, tree, session.view().camera, prompts));
            }
            break;
          }
          case Intent::kGuardian:
            narrate(routed.reply);
            break;
        }
      } catch (const Error& e) {
        result.error = e.code();
        NarrationPayload payload;
        payload.node = current_name();
        narrate(impl_->say(error_task(e.code()), payload, session));
      }
    }
  }

  result.awaiting_detail = session.awaiting_detail();
  if (session.exploration().active()) result.options = session.exploration().options();
  session.conversation().push_back({"system", result.narration});
  return result;
}

QueryResult DialogueRouter::process_query(std::string_view query, SessionState& session) const {
  return apply(route(query, context_of(session)), session);
}

QueryResult DialogueRouter::select_option(std::size_t index, SessionState& session) const {
  const auto& plan = session.exploration();
  if (!plan.active() || plan.options().empty()) throw Error(ErrorCode::kNoPendingOptions, "no options are pending");
  if (index >= plan.options().size()) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "option " + std::to_string(index) + " of " + std::to_string(plan.options().size()));
  }
  const SceneTree& tree = session.tree();
  const SceneNode& chosen = tree.node(plan.options()[index]);

  NarrationPayload payload;
  payload.node = chosen.name;
  std::string speech = join_speech(impl_->say("transition", payload, session), chosen.description);

  QueryResult result;
  result.intent = Intent::kEncyclopedia;
  result.scenes.push_back(session.select_option(index, speech));

  std::string follow_up;
  if (session.exploration().active()) {
    NarrationPayload options;
    for (const auto& id : session.exploration().options()) options.options.push_back(tree.node(id).name);
    follow_up = impl_->say("option-prompt", options, session);
    result.options = session.exploration().options();
  } else {
    follow_up = impl_->say("exploration-end", {}, session);
  }
  session.enqueue(build_scene(SceneKind::kSpeechOnly, std::nullopt, tree, session.view().camera, follow_up));
  result.narration = join_speech(std::move(speech), follow_up);
  result.awaiting_detail = session.awaiting_detail();
  session.conversation().push_back({"user", "option " + std::to_string(index + 1)});
  session.conversation().push_back({"system", result.narration});
  return result;
}

std::string DialogueRouter::introduction(SessionState& session) const {
  NarrationPayload payload;
  payload.node = session.tree().root().name;
  return impl_->say("introduction", payload, session);
}

}  // namespace vizchat
