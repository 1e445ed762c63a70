#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "vizchat/scene/scene_tree.hpp"
#include "vizchat/visual/camera.hpp"

namespace vizchat {

/// Manager classes.
enum class Intent { kPilot, kCuttingPlane, kExplorer, kEncyclopedia, kGuardian };

std::string_view to_string(Intent intent) noexcept;

/// Accepts a class label in any case, with or without punctuation or the
/// space in "Cutting Plane". Throws Error(kUnparseableReply).
Intent parse_intent_label(std::string_view reply);

/// Pilot sub-intents, numbered as the Pilot bot replies them.
enum class PilotCommand { kNodeNavigation = 1, kScaleChange = 2, kReset = 3, kReturnBack = 4 };

std::string_view to_string(PilotCommand command) noexcept;

/// Leading digit 1-4 of a Pilot reply. Throws Error(kUnparseableReply).
PilotCommand parse_pilot_digit(std::string_view reply);

struct PilotIntent {
  PilotCommand command = PilotCommand::kNodeNavigation;
  std::optional<NodeId> target;                     // kNodeNavigation
  ScaleDirection direction = ScaleDirection::kUp;  // kScaleChange

  friend bool operator==(const PilotIntent&, const PilotIntent&) = default;
};

/// Down for "down", "deeper", "lower", "inside a level"...; Up otherwise.
ScaleDirection scale_direction_of(std::string_view query);

}  // namespace vizchat
