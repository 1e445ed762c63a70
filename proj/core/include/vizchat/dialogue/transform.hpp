#pragma once

#include <string>
#include <string_view>

namespace vizchat {

/// Explorer payload `{zoom, yaw, pitch, roll}`; angles in degrees.
struct Transform {
  double zoom_factor = 1.0;
  double yaw = 0.0;
  double pitch = 0.0;
  double roll = 0.0;

  bool is_identity() const noexcept {
    return zoom_factor == 1.0 && yaw == 0.0 && pitch == 0.0 && roll == 0.0;
  }

  friend bool operator==(const Transform&, const Transform&) = default;
};

/// Parses the first `{z,y,p,r}` group in a bot reply. Whitespace around the
/// numbers is ignored; anything else inside the braces is rejected.
/// Throws Error(kMalformedTransform) or Error(kNonPositiveZoom).
Transform parse_transform(std::string_view reply);

/// Shortest round-trip formatting, e.g. "{1,90,0,0}".
std::string format_transform(const Transform& transform);

}  // namespace vizchat
