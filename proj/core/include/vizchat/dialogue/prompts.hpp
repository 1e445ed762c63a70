#pragma once

#include <array>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace vizchat {

enum class BotRole {
  kManager,
  kPilot,
  kExplorer,
  kEncyclopediaConcise,
  kEncyclopediaDetailed,
  kGuardian,
};

inline constexpr std::array<BotRole, 6> kAllBotRoles = {
    BotRole::kManager,             BotRole::kPilot,    BotRole::kExplorer,
    BotRole::kEncyclopediaConcise, BotRole::kEncyclopediaDetailed, BotRole::kGuardian,
};

std::string_view to_string(BotRole role) noexcept;

/// Prompt asset file name for a role, e.g. "encyclopedia_concise.txt".
std::string prompt_file_name(BotRole role);

/// Model-specific values spliced into prompts.
struct PromptContext {
  std::string model_name;
  std::vector<std::string> node_names;
};

/// One editable system prompt per bot, loaded from a directory at startup.
/// Templates may use {model} and {nodes} (node names joined with "; ").
class PromptSet {
 public:
  static PromptSet load_directory(const std::filesystem::path& directory);
  static PromptSet from_map(std::map<BotRole, std::string> templates);

  const std::string& raw(BotRole role) const;
  std::string render(BotRole role, const PromptContext& context) const;

 private:
  std::map<BotRole, std::string> templates_;
};

}  // namespace vizchat
