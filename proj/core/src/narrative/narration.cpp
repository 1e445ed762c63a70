#include "vizchat/narrative/narration.hpp"

#include <array>
#include <fstream>
#include <random>

#include <nlohmann/json.hpp>

#include "../detail/text.hpp"
#include "vizchat/error.hpp"

namespace vizchat {
namespace {

constexpr std::array<std::string_view, 8> kRequired = {
    "introduction", "help",         "transition",    "explorer-ack",
    "pilot-ack",    "cutting-ack",  "option-prompt", "detail-prompt",
};

}  // namespace

std::span<const std::string_view> NarrationTemplates::required_task_types() noexcept { return kRequired; }

NarrationTemplates NarrationTemplates::load(std::istream& source) {
  nlohmann::json document;
  try {
    document = nlohmann::json::parse(source);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::kParseError, std::string("narration templates: ") + e.what());
  }
  return from_json(document);
}

NarrationTemplates NarrationTemplates::load_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParseError, "cannot open " + path.string());
  return load(in);
}

NarrationTemplates NarrationTemplates::from_json(const nlohmann::json& document) {
  if (!document.is_object()) throw Error(ErrorCode::kParseError, "narration templates must be an object");
  NarrationTemplates out;
  for (const auto& [task, list] : document.items()) {
    if (!list.is_array() || list.empty()) {
      throw Error(ErrorCode::kParseError, "task '" + task + "' needs a non-empty list of templates");
    }
    auto& variants = out.templates_[task];
    for (const auto& entry : list) variants.push_back(entry.get<std::string>());
  }
  for (auto task : kRequired) {
    if (!out.has(task)) {
      throw Error(ErrorCode::kValidationError, "narration templates miss task '" + std::string(task) + "'");
    }
  }
  return out;
}

bool NarrationTemplates::has(std::string_view task_type) const {
  return templates_.find(task_type) != templates_.end();
}

const std::vector<std::string>& NarrationTemplates::templates(std::string_view task_type) const {
  auto it = templates_.find(task_type);
  if (it == templates_.end()) {
    throw Error(ErrorCode::kUnknownTaskType, "no narration for task '" + std::string(task_type) + "'");
  }
  return it->second;
}

std::string NarrationTemplates::generate(std::string_view task_type, const NarrationPayload& payload,
                                         std::uint64_t seed) const {
  const auto& variants = templates(task_type);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, variants.size() - 1);
  return fill_slots(variants[pick(rng)], payload);
}

std::string join_options(const std::vector<std::string>& options) {
  std::string out;
  for (std::size_t i = 0; i < options.size(); ++i) {
    if (i > 0) out += (i + 1 == options.size()) ? " or " : ", ";
    out += options[i];
  }
  return out;
}

std::string fill_slots(std::string_view text, const NarrationPayload& payload) {
  std::string out(text);
  out = detail::replace_all(std::move(out), "{node}", payload.node);
  out = detail::replace_all(std::move(out), "{options}", join_options(payload.options));
  out = detail::replace_all(std::move(out), "{direction}", payload.direction);
  out = detail::replace_all(std::move(out), "{model}", payload.model);
  return out;
}

}  // namespace vizchat
