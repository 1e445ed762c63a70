#include "vizchat/dialogue/transform.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <system_error>

#include "../detail/text.hpp"
#include "vizchat/error.hpp"

namespace vizchat {
namespace {

[[noreturn]] void malformed(std::string_view reply) {
  throw Error(ErrorCode::kMalformedTransform,
              "expected {zoom,yaw,pitch,roll}, got '" + std::string(reply) + "'");
}

double parse_number(std::string_view token, std::string_view reply) {
  token = detail::trim(token);
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);
  double value = 0.0;
  const auto* first = token.data();
  const auto* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (token.empty() || ec != std::errc{} || ptr != last || !std::isfinite(value)) malformed(reply);
  return value;
}

}  // namespace

Transform parse_transform(std::string_view reply) {
  const auto open = reply.find('{');
  if (open == std::string_view::npos) malformed(reply);
  const auto close = reply.find('}', open);
  if (close == std::string_view::npos) malformed(reply);

  std::string_view body = reply.substr(open + 1, close - open - 1);
  std::array<double, 4> values{};
  std::size_t count = 0;
  while (true) {
    const auto comma = body.find(',');
    if (count == values.size()) malformed(reply);
    values[count++] = parse_number(body.substr(0, comma), reply);
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  if (count != values.size()) malformed(reply);

  Transform t{values[0], values[1], values[2], values[3]};
  if (!(t.zoom_factor > 0.0)) {
    throw Error(ErrorCode::kNonPositiveZoom, "zoom factor must be positive");
  }
  return t;
}

std::string format_transform(const Transform& t) {
  std::string out = "{";
  const std::array<double, 4> values{t.zoom_factor, t.yaw, t.pitch, t.roll};
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ',';
    std::array<char, 32> buffer{};
    auto [ptr, ec] = std::to_chars(buffer.data(), buffer.data() + buffer.size(), values[i]);
    out.append(buffer.data(), ptr);
  }
  out += '}';
  return out;
}

}  // namespace vizchat
