#include "vizchat/gateway/desk_repl.hpp"

#include <charconv>
#include <istream>
#include <ostream>

#include <nlohmann/json.hpp>

#include "../detail/text.hpp"

namespace vizchat {
namespace {

constexpr double kReplTickStep = 0.05;

std::string scene_line(const Scene& scene, const SceneTree& tree) {
  std::string line(to_string(scene.kind));
  if (scene.target_node_id) line += " " + tree.node(*scene.target_node_id).name;
  return line;
}

std::string options_line(const std::vector<NodeId>& options, const SceneTree& tree) {
  std::string line;
  for (std::size_t i = 0; i < options.size(); ++i) {
    if (!line.empty()) line += "  ";
    line += "[" + std::to_string(i) + "] " + tree.node(options[i]).name;
  }
  return line;
}

template <typename T>
bool parse_number(std::string_view text, T& value) {
  text = detail::trim(text);
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  return ec == std::errc{} && ptr == text.data() + text.size();
}

}  // namespace

DeskRepl::DeskRepl(SessionManager& sessions, std::string_view model, std::ostream& out)
    : sessions_(sessions), session_id_(sessions.create_session(model)), out_(out) {}

void DeskRepl::greet() {
  sessions_.inspect(session_id_, [&](const SessionState& state) {
    out_ << "model: " << state.tree().model_name() << '\n';
    if (!state.conversation().empty()) out_ << "system: " << state.conversation().back().text << '\n';
  });
}

void DeskRepl::print_result(const QueryResult& result) {
  sessions_.inspect(session_id_, [&](const SessionState& state) {
    const SceneTree& tree = state.tree();
    if (result.intent) out_ << "intent: " << to_string(*result.intent) << '\n';
    if (result.error) out_ << "error: " << to_string(*result.error) << '\n';
    out_ << "system: " << result.narration << '\n';
    for (const auto& scene : result.scenes) out_ << "scene: " << scene_line(scene, tree) << '\n';
    if (!result.options.empty()) out_ << "options: " << options_line(result.options, tree) << '\n';
  });
}

void DeskRepl::print_state() {
  sessions_.inspect(session_id_, [&](const SessionState& state) {
    const SceneTree& tree = state.tree();
    out_ << "node: " << tree.node(state.view().current_node).name << " | level " << state.view().scale_level;
    const auto& current = state.timeline().current();
    out_ << " | scene: " << (current ? scene_line(*current, tree) : std::string("none"));
    out_ << " | queued: " << state.timeline().size();
    if (state.exploration().active()) out_ << " | options: " << options_line(state.exploration().options(), tree);
    if (state.awaiting_detail()) out_ << " | detail pending";
    out_ << '\n';
  });
}

bool DeskRepl::handle(std::string_view line) {
  line = detail::trim(line);
  if (line.empty()) return true;
  try {
    if (line == ":quit" || line == ":q") return false;
    if (line == ":help") {
      out_ << "commands: :select N, :done, :tick S, :state, :json, :quit; anything else is a query\n";
    } else if (line == ":state") {
      print_state();
    } else if (line == ":json") {
      out_ << sessions_.get_state(session_id_).dump(2) << '\n';
    } else if (line == ":done") {
      out_ << (sessions_.speech_complete(session_id_) ? "speech done\n" : "nothing speaking\n");
    } else if (line.starts_with(":select")) {
      std::size_t index = 0;
      if (!parse_number(line.substr(7), index)) {
        out_ << "usage: :select N\n";
      } else {
        print_result(sessions_.post_selection(session_id_, index));
      }
    } else if (line.starts_with(":tick")) {
      double seconds = 0.0;
      if (!parse_number(line.substr(5), seconds) || seconds < 0.0) {
        out_ << "usage: :tick SECONDS\n";
      } else {
        double remaining = seconds;
        while (remaining > 1e-9) {
          const double step = remaining < kReplTickStep ? remaining : kReplTickStep;
          sessions_.tick(session_id_, step);
          remaining -= step;
        }
      }
    } else if (line.starts_with(":")) {
      out_ << "unknown command " << line << '\n';
    } else {
      print_result(sessions_.post_query(session_id_, line));
    }
  } catch (const Error& e) {
    out_ << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
  }
  return true;
}

void DeskRepl::run(std::istream& in, bool echo) {
  std::string line;
  while (std::getline(in, line)) {
    if (echo) out_ << "> " << line << '\n';
    if (!handle(line)) break;
  }
}

}  // namespace vizchat
