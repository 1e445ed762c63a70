#include "vizchat/dialogue/mock_backend.hpp"

#include <array>
#include <fstream>
#include <optional>
#include <thread>

#include <nlohmann/json.hpp>

#include "../detail/text.hpp"
#include "vizchat/dialogue/transform.hpp"
#include "vizchat/error.hpp"

namespace vizchat {
namespace {

using detail::contains_phrase;

constexpr std::array<std::string_view, 9> kCuttingWords = {
    "interior", "inside", "internal", "cut", "cutting", "cross section", "slice", "open it", "peel",
};

constexpr std::array<std::string_view, 22> kViewWords = {
    "side",      "rotate",  "turn",       "zoom",   "closer",  "up close",     "too far", "far away",
    "farther",   "too close", "top",      "bottom", "above",   "below",        "behind",  "flip",
    "tilt",      "spin",    "upside down", "angle", "from the front", "magnify",
};

constexpr std::array<std::string_view, 19> kNavigationWords = {
    "show me",  "show the", "take me", "go to",   "go back",     "go up",     "go down",
    "fly",      "navigate", "guide me", "move to", "level",      "again",     "start over",
    "back to",  "return",   "previous", "reset",  "last thing",
};

constexpr std::array<std::string_view, 14> kQuestionStarts = {
    "what", "why",  "how",  "who",  "where", "which", "when",
    "is",   "are",  "does", "do",   "can",   "tell me", "explain",
};

constexpr std::array<std::string_view, 20> kDomainWords = {
    "virus",   "viruses",  "protein",  "proteins",  "dna",       "rna",       "genome",
    "cell",    "cells",    "molecule", "molecular", "structure", "structures", "bacteriophage",
    "phage",   "infection", "infect",  "membrane",  "enzyme",    "model",
};

struct PromptFacts {
  std::string model;
  std::vector<std::string> structures;  // lowercase
};

PromptFacts read_prompt(const std::string& system_prompt) {
  PromptFacts facts;
  std::size_t start = 0;
  while (start <= system_prompt.size()) {
    std::size_t end = system_prompt.find('\n', start);
    if (end == std::string::npos) end = system_prompt.size();
    const std::string_view line = detail::trim(std::string_view(system_prompt).substr(start, end - start));
    constexpr std::string_view kModel = "Current model:";
    constexpr std::string_view kStructures = "Known structures:";
    if (line.starts_with(kModel)) {
      facts.model = std::string(detail::trim(line.substr(kModel.size())));
    } else if (line.starts_with(kStructures)) {
      std::string_view rest = line.substr(kStructures.size());
      while (!rest.empty()) {
        const auto semi = rest.find(';');
        const auto item = detail::trim(rest.substr(0, semi));
        if (!item.empty()) facts.structures.push_back(detail::to_lower(item));
        if (semi == std::string_view::npos) break;
        rest.remove_prefix(semi + 1);
      }
    }
    start = end + 1;
  }
  return facts;
}

template <std::size_t N>
bool any_phrase(std::string_view q, const std::array<std::string_view, N>& phrases) {
  for (auto phrase : phrases) {
    if (contains_phrase(q, phrase)) return true;
  }
  return false;
}

bool mentions_structure(std::string_view q, const PromptFacts& facts) {
  for (const auto& name : facts.structures) {
    if (contains_phrase(q, name) || contains_phrase(q, name + "s")) return true;
  }
  return false;
}

bool is_question(std::string_view q) {
  if (!q.empty() && q.back() == '?') return true;
  for (auto start : kQuestionStarts) {
    if (q.starts_with(start) && (q.size() == start.size() || !detail::is_word_byte(q[start.size()]))) {
      return true;
    }
  }
  return false;
}

bool mentions_domain(std::string_view q, const PromptFacts& facts) {
  if (mentions_structure(q, facts) || any_phrase(q, kDomainWords)) return true;
  return !facts.model.empty() && contains_phrase(q, detail::to_lower(facts.model));
}

// "turn on the lights" is not a camera move.
bool asks_for_view(std::string_view q) {
  if (!any_phrase(q, kViewWords)) return false;
  if (contains_phrase(q, "turn on") || contains_phrase(q, "turn off")) {
    for (auto word : kViewWords) {
      if (word != "turn" && contains_phrase(q, word)) return true;
    }
    return false;
  }
  return true;
}

std::string classify(std::string_view q, const PromptFacts& facts) {
  if (any_phrase(q, kCuttingWords)) return "Cutting Plane";
  if (asks_for_view(q)) return "Explorer";
  if (any_phrase(q, kNavigationWords)) return "Pilot";
  if (is_question(q) && mentions_domain(q, facts)) return "Encyclopedia";
  if (mentions_structure(q, facts)) return "Pilot";
  return "Guardian";
}

std::string pilot_digit(std::string_view q, const PromptFacts& facts) {
  static constexpr std::array<std::string_view, 7> kReset = {
      "start", "beginning", "reset", "default", "from scratch", "starting point", "home",
  };
  static constexpr std::array<std::string_view, 9> kScale = {
      "level", "zoom out", "bigger picture", "go up", "go down", "higher", "deeper", "lower", "parent",
  };
  static constexpr std::array<std::string_view, 6> kBack = {
      "back", "last", "previous", "again", "before", "return",
  };
  if (mentions_structure(q, facts)) return "1";
  if (any_phrase(q, kReset)) return "3";
  if (any_phrase(q, kScale)) return "2";
  if (any_phrase(q, kBack)) return "4";
  return "1";
}

std::string explorer_transform(std::string_view q) {
  Transform t;
  if (contains_phrase(q, "a little closer") || contains_phrase(q, "a bit closer") ||
      contains_phrase(q, "slightly closer")) {
    t.zoom_factor = 1.5;
  } else if (contains_phrase(q, "up close") || contains_phrase(q, "closer") || contains_phrase(q, "too far") ||
             contains_phrase(q, "zoom in") || contains_phrase(q, "magnify")) {
    t.zoom_factor = 2.0;
  } else if (contains_phrase(q, "too close") || contains_phrase(q, "zoom out") || contains_phrase(q, "farther") ||
             contains_phrase(q, "further away") || contains_phrase(q, "step back")) {
    t.zoom_factor = 0.5;
  }

  if (contains_phrase(q, "right")) {
    t.yaw = 90.0;
  } else if (contains_phrase(q, "left")) {
    t.yaw = -90.0;
  } else if (contains_phrase(q, "behind") || contains_phrase(q, "back side") || contains_phrase(q, "rear") ||
             contains_phrase(q, "other side")) {
    t.yaw = 180.0;
  } else if (contains_phrase(q, "rotate") || contains_phrase(q, "turn") || contains_phrase(q, "spin")) {
    t.yaw = 30.0;
  }

  if (contains_phrase(q, "top") || contains_phrase(q, "above")) {
    t.pitch = -90.0;
  } else if (contains_phrase(q, "bottom") || contains_phrase(q, "below") || contains_phrase(q, "underneath")) {
    t.pitch = 90.0;
  }

  if (contains_phrase(q, "upside down") || contains_phrase(q, "flip")) {
    t.roll = 180.0;
  } else if (contains_phrase(q, "tilt")) {
    t.roll = 30.0;
  }
  return format_transform(t);
}

std::string guardian_text(std::string_view q, const PromptFacts& facts) {
  const std::string model = facts.model.empty() ? "model" : facts.model;
  const std::string redirect = "Let's get back to the " + model + ": ask me about any of its parts.";
  if (q.empty()) return redirect;
  return "That is outside what I can do here. " + redirect;
}

}  // namespace

std::string normalize_question(std::string_view question) {
  std::string q = detail::to_lower(detail::trim(question));
  while (!q.empty() && (q.back() == '?' || q.back() == '.' || q.back() == '!' || q.back() == ',')) q.pop_back();
  return std::string(detail::trim(q));
}

CannedAnswers load_canned_answers(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParseError, "cannot open " + path.string());
  nlohmann::json document;
  try {
    document = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::kParseError, std::string("canned answers: ") + e.what());
  }
  CannedAnswers canned;
  for (const auto& [question, answer] : document.items()) {
    canned.emplace(normalize_question(question),
                   CannedAnswer{answer.at("concise").get<std::string>(), answer.value("detailed", "")});
  }
  return canned;
}

MockBot::MockBot(BotRole role, MockOptions options) : role_(role), options_(std::move(options)) {}

std::chrono::milliseconds MockBot::budget() const { return options_.delay + std::chrono::seconds{2}; }

std::string MockBot::complete(const std::string& system_prompt, const std::vector<ChatMessage>& messages) {
  if (options_.delay.count() > 0) std::this_thread::sleep_for(options_.delay);

  std::string query;
  for (auto it = messages.rbegin(); it != messages.rend(); ++it) {
    if (it->role == "user") {
      query = it->content;
      break;
    }
  }
  const PromptFacts facts = read_prompt(system_prompt);
  const std::string q = detail::to_lower(detail::trim(query));

  switch (role_) {
    case BotRole::kManager: return classify(q, facts);
    case BotRole::kPilot: return pilot_digit(q, facts);
    case BotRole::kExplorer: return explorer_transform(q);
    case BotRole::kGuardian: return guardian_text(q, facts);
    case BotRole::kEncyclopediaConcise:
    case BotRole::kEncyclopediaDetailed: {
      const bool concise = role_ == BotRole::kEncyclopediaConcise;
      if (auto it = options_.canned.find(normalize_question(query)); it != options_.canned.end()) {
        return concise ? it->second.concise : it->second.detailed;
      }
      const std::string model = facts.model.empty() ? "model" : facts.model;
      return concise ? "I have no prepared answer to that question about the " + model + "."
                     : "A language-model backend can give a longer answer about the " + model + ".";
    }
  }
  throw Error(ErrorCode::kBackendUnavailable, "mock has no behaviour for this role");
}

ScriptedBackend::ScriptedBackend(Handler handler, std::chrono::milliseconds delay, std::chrono::milliseconds budget)
    : handler_(std::move(handler)), delay_(delay), budget_(budget) {}

std::string ScriptedBackend::complete(const std::string& system_prompt, const std::vector<ChatMessage>& messages) {
  if (delay_.count() > 0) std::this_thread::sleep_for(delay_);
  return handler_(system_prompt, messages);
}

}  // namespace vizchat
