#include "vizchat/gateway/config.hpp"

#include <cstdlib>
#include <fstream>

#include <nlohmann/json.hpp>

#include "vizchat/dialogue/mock_backend.hpp"
#include "vizchat/dialogue/remote_backend.hpp"
#include "vizchat/error.hpp"

namespace vizchat {
namespace {

using json = nlohmann::json;

std::filesystem::path resolve(const std::filesystem::path& base, const std::string& value) {
  std::filesystem::path p(value);
  return p.is_absolute() ? p : base / p;
}

std::optional<BotRole> role_named(std::string_view name) {
  for (BotRole role : kAllBotRoles) {
    if (to_string(role) == name) return role;
  }
  return std::nullopt;
}

}  // namespace

ServiceConfig ServiceConfig::load_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParseError, "config: cannot open " + path.string());
  json document;
  try {
    document = json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kParseError, std::string("config: ") + e.what());
  }
  return from_json(document, path.parent_path());
}

ServiceConfig ServiceConfig::from_json(const json& document, const std::filesystem::path& base_dir) {
  ServiceConfig config;
  try {
    for (const auto& [key, file] : document.at("models").items()) {
      config.models.emplace(key, resolve(base_dir, file.get<std::string>()));
    }
    config.prompt_dir = resolve(base_dir, document.value("prompt_dir", std::string("prompts")));
    config.narration = resolve(base_dir, document.value("narration", std::string("narration.json")));
    if (document.contains("mock_answers")) {
      config.mock_answers = resolve(base_dir, document.at("mock_answers").get<std::string>());
    }
    config.spoken_rate = document.value("spoken_rate", config.spoken_rate);
    config.tick_rate_hz = document.value("tick_rate_hz", config.tick_rate_hz);
    config.session_idle_timeout = std::chrono::seconds(document.value("session_idle_timeout", 1800));
    config.rng_seed = document.value("rng_seed", std::uint64_t{0});
    config.host = document.value("host", config.host);
    config.port = document.value("port", config.port);

    if (auto it = document.find("backend"); it != document.end()) {
      BackendConfig& b = config.backend;
      b.kind = it->value("kind", b.kind);
      b.base_url = it->value("base_url", b.base_url);
      b.default_model = it->value("model", b.default_model);
      b.api_key_env = it->value("api_key_env", b.api_key_env);
      b.timeout = std::chrono::milliseconds(it->value("timeout_ms", 30'000));
      b.max_retries = it->value("max_retries", b.max_retries);
      b.mock_delay = std::chrono::milliseconds(it->value("mock_delay_ms", 0));
      if (auto bots = it->find("bots"); bots != it->end()) {
        for (const auto& [name, model] : bots->items()) {
          auto role = role_named(name);
          if (!role) throw Error(ErrorCode::kParseError, "config: unknown bot '" + name + "'");
          b.models[*role] = model.get<std::string>();
        }
      }
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParseError, std::string("config: ") + e.what());
  }
  if (config.backend.kind != "mock" && config.backend.kind != "remote") {
    throw Error(ErrorCode::kParseError, "config: backend kind must be 'mock' or 'remote'");
  }
  if (!(config.spoken_rate > 0.0) || !(config.tick_rate_hz > 0.0)) {
    throw Error(ErrorCode::kParseError, "config: spoken_rate and tick_rate_hz must be positive");
  }
  return config;
}

ModelRegistry load_models(const ServiceConfig& config) {
  ModelRegistry models;
  for (const auto& [key, path] : config.models) {
    models.emplace(key, std::make_shared<const SceneTree>(SceneTree::load_file(path)));
  }
  return models;
}

BotBackends make_backends(const ServiceConfig& config) {
  const BackendConfig& b = config.backend;
  if (b.kind == "mock") {
    MockOptions options;
    options.delay = b.mock_delay;
    if (!config.mock_answers.empty()) options.canned = load_canned_answers(config.mock_answers);
    return make_mock_backends(options);
  }

  const char* key = std::getenv(b.api_key_env.c_str());
  if (key == nullptr || *key == '\0') {
    throw Error(ErrorCode::kBackendUnavailable, "environment variable " + b.api_key_env + " is not set");
  }
  BotBackends backends;
  for (BotRole role : kAllBotRoles) {
    RemoteBackendOptions options;
    options.base_url = b.base_url;
    auto it = b.models.find(role);
    options.model = it != b.models.end() ? it->second : b.default_model;
    options.api_key = key;
    options.timeout = b.timeout;
    options.max_retries = b.max_retries;
    backends.emplace(role, std::make_shared<RemoteBackend>(std::move(options)));
  }
  return backends;
}

std::unique_ptr<DialogueRouter> make_router(const ServiceConfig& config) {
  return std::make_unique<DialogueRouter>(make_backends(config), PromptSet::load_directory(config.prompt_dir),
                                          NarrationTemplates::load_file(config.narration));
}

}  // namespace vizchat
