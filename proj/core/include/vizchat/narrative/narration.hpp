#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace vizchat {

/// Values substituted into template slots {node}, {options}, {direction}, {model}.
struct NarrationPayload {
  std::string node;
  std::vector<std::string> options;
  std::string direction;
  std::string model;
};

/// Hand-written response variants per task type, one picked at random per call.
class NarrationTemplates {
 public:
  /// Task types every template file must define.
  static std::span<const std::string_view> required_task_types() noexcept;

  static NarrationTemplates load(std::istream& source);
  static NarrationTemplates load_file(const std::filesystem::path& path);
  static NarrationTemplates from_json(const nlohmann::json& document);

  bool has(std::string_view task_type) const;
  /// Throws Error(kUnknownTaskType).
  const std::vector<std::string>& templates(std::string_view task_type) const;

  /// Uniform pick under `seed`, slots filled from `payload`.
  std::string generate(std::string_view task_type, const NarrationPayload& payload,
                       std::uint64_t seed) const;

 private:
  std::map<std::string, std::vector<std::string>, std::less<>> templates_;
};

/// "A", "A or B", "A, B or C".
std::string join_options(const std::vector<std::string>& options);

std::string fill_slots(std::string_view text, const NarrationPayload& payload);

inline std::string generate_narration(const NarrationTemplates& templates, std::string_view task_type,
                                      const NarrationPayload& payload, std::uint64_t seed) {
  return templates.generate(task_type, payload, seed);
}

}  // namespace vizchat
