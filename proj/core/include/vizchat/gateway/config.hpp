#pragma once

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "vizchat/dialogue/router.hpp"
#include "vizchat/scene/scene_tree.hpp"

namespace vizchat {

struct BackendConfig {
  std::string kind = "mock";  // "mock" or "remote"
  std::string base_url;
  std::string default_model;
  std::map<BotRole, std::string> models;  // per-bot override of default_model
  std::string api_key_env = "OPENAI_API_KEY";
  std::chrono::milliseconds timeout{30'000};
  int max_retries = 1;
  std::chrono::milliseconds mock_delay{0};
};

/// Service settings. Relative paths are resolved against the config file's
/// directory.
struct ServiceConfig {
  std::map<std::string, std::filesystem::path> models;  // model key -> scene tree file
  BackendConfig backend;
  std::filesystem::path prompt_dir;
  std::filesystem::path narration;
  std::filesystem::path mock_answers;
  double spoken_rate = 2.5;  // words per second for the speech timer
  double tick_rate_hz = 20.0;
  std::chrono::seconds session_idle_timeout{1800};
  std::uint64_t rng_seed = 0;
  std::string host = "127.0.0.1";
  int port = 8080;

  static ServiceConfig load_file(const std::filesystem::path& path);
  static ServiceConfig from_json(const nlohmann::json& document, const std::filesystem::path& base_dir);
};

using ModelRegistry = std::map<std::string, std::shared_ptr<const SceneTree>, std::less<>>;

ModelRegistry load_models(const ServiceConfig& config);

/// Throws Error(kBackendUnavailable) for a remote backend without an API key.
BotBackends make_backends(const ServiceConfig& config);

std::unique_ptr<DialogueRouter> make_router(const ServiceConfig& config);

}  // namespace vizchat
