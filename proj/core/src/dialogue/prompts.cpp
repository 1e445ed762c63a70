#include "vizchat/dialogue/prompts.hpp"

#include <fstream>
#include <sstream>

#include "../detail/text.hpp"
#include "vizchat/error.hpp"

namespace vizchat {

std::string_view to_string(BotRole role) noexcept {
  switch (role) {
    case BotRole::kManager: return "manager";
    case BotRole::kPilot: return "pilot";
    case BotRole::kExplorer: return "explorer";
    case BotRole::kEncyclopediaConcise: return "encyclopedia_concise";
    case BotRole::kEncyclopediaDetailed: return "encyclopedia_detailed";
    case BotRole::kGuardian: return "guardian";
  }
  return "unknown";
}

std::string prompt_file_name(BotRole role) { return std::string(to_string(role)) + ".txt"; }

PromptSet PromptSet::load_directory(const std::filesystem::path& directory) {
  std::map<BotRole, std::string> templates;
  for (BotRole role : kAllBotRoles) {
    const auto path = directory / prompt_file_name(role);
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::kParseError, "missing prompt asset " + path.string());
    std::ostringstream text;
    text << in.rdbuf();
    templates.emplace(role, text.str());
  }
  return from_map(std::move(templates));
}

PromptSet PromptSet::from_map(std::map<BotRole, std::string> templates) {
  for (BotRole role : kAllBotRoles) {
    if (!templates.contains(role)) {
      throw Error(ErrorCode::kValidationError, "no prompt for bot '" + std::string(to_string(role)) + "'");
    }
  }
  PromptSet set;
  set.templates_ = std::move(templates);
  return set;
}

const std::string& PromptSet::raw(BotRole role) const { return templates_.at(role); }

std::string PromptSet::render(BotRole role, const PromptContext& context) const {
  std::string nodes;
  for (const auto& name : context.node_names) {
    if (!nodes.empty()) nodes += "; ";
    nodes += name;
  }
  std::string text = detail::replace_all(raw(role), "{model}", context.model_name);
  return detail::replace_all(std::move(text), "{nodes}", nodes);
}

}  // namespace vizchat
