#include "vizchat/dialogue/intent.hpp"

#include <array>

#include "../detail/text.hpp"
#include "vizchat/error.hpp"

namespace vizchat {

std::string_view to_string(Intent intent) noexcept {
  switch (intent) {
    case Intent::kPilot: return "Pilot";
    case Intent::kCuttingPlane: return "CuttingPlane";
    case Intent::kExplorer: return "Explorer";
    case Intent::kEncyclopedia: return "Encyclopedia";
    case Intent::kGuardian: return "Guardian";
  }
  return "Unknown";
}

Intent parse_intent_label(std::string_view reply) {
  std::string key;
  for (char c : reply) {
    if (detail::is_word_byte(c)) key += detail::lower(c);
  }
  if (key == "pilot") return Intent::kPilot;
  if (key == "cuttingplane") return Intent::kCuttingPlane;
  if (key == "explorer") return Intent::kExplorer;
  if (key == "encyclopedia") return Intent::kEncyclopedia;
  if (key == "guardian") return Intent::kGuardian;
  throw Error(ErrorCode::kUnparseableReply, "not an intent label: '" + std::string(reply) + "'");
}

std::string_view to_string(PilotCommand command) noexcept {
  switch (command) {
    case PilotCommand::kNodeNavigation: return "NodeNavigation";
    case PilotCommand::kScaleChange: return "ScaleChange";
    case PilotCommand::kReset: return "Reset";
    case PilotCommand::kReturnBack: return "ReturnBack";
  }
  return "Unknown";
}

PilotCommand parse_pilot_digit(std::string_view reply) {
  const std::string_view trimmed = detail::trim(reply);
  const bool single_digit = !trimmed.empty() && (trimmed.size() == 1 || !detail::is_word_byte(trimmed[1]));
  if (single_digit && trimmed.front() >= '1' && trimmed.front() <= '4') {
    return static_cast<PilotCommand>(trimmed.front() - '0');
  }
  throw Error(ErrorCode::kUnparseableReply, "expected a digit 1-4, got '" + std::string(reply) + "'");
}

ScaleDirection scale_direction_of(std::string_view query) {
  static constexpr std::array<std::string_view, 7> kDown = {
      "down", "deeper", "lower", "smaller", "zoom in", "into", "inside",
  };
  const std::string q = detail::to_lower(query);
  for (auto phrase : kDown) {
    if (detail::contains_phrase(q, phrase)) return ScaleDirection::kDown;
  }
  return ScaleDirection::kUp;
}

}  // namespace vizchat
