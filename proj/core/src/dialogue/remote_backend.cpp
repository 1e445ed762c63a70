#include "vizchat/dialogue/remote_backend.hpp"

#include <regex>
#include <thread>

#include <httplib.h>
#include <nlohmann/json.hpp>

#include "vizchat/error.hpp"

namespace vizchat {
namespace {

using json = nlohmann::json;

bool retryable(int status) { return status == 429 || status >= 500; }

}  // namespace

RemoteBackend::RemoteBackend(RemoteBackendOptions options) : options_(std::move(options)) {
  static const std::regex kUrl(R"(^(https?://[^/]+)(/.*)?$)");
  std::smatch match;
  if (!std::regex_match(options_.base_url, match, kUrl)) {
    throw Error(ErrorCode::kBadRequest, "invalid backend base URL '" + options_.base_url + "'");
  }
  origin_ = match[1].str();
  std::string base_path = match[2].matched ? match[2].str() : std::string{};
  while (!base_path.empty() && base_path.back() == '/') base_path.pop_back();
  path_ = base_path + "/chat/completions";
}

std::chrono::milliseconds RemoteBackend::budget() const {
  std::chrono::milliseconds total{0};
  std::chrono::milliseconds backoff = options_.initial_backoff;
  for (int attempt = 0; attempt <= options_.max_retries; ++attempt) {
    total += options_.timeout;
    if (attempt < options_.max_retries) {
      total += backoff;
      backoff *= 2;
    }
  }
  return total;
}

std::string RemoteBackend::complete(const std::string& system_prompt, const std::vector<ChatMessage>& messages) {
  json payload_messages = json::array();
  payload_messages.push_back({{"role", "system"}, {"content", system_prompt}});
  for (const auto& message : messages) {
    payload_messages.push_back({{"role", message.role}, {"content", message.content}});
  }
  const std::string body = json{
      {"model", options_.model},
      {"messages", std::move(payload_messages)},
      {"temperature", options_.temperature},
  }.dump();

  httplib::Client client(origin_);
  const auto seconds = std::chrono::duration_cast<std::chrono::seconds>(options_.timeout);
  const auto micros = std::chrono::duration_cast<std::chrono::microseconds>(options_.timeout - seconds);
  client.set_connection_timeout(seconds.count(), micros.count());
  client.set_read_timeout(seconds.count(), micros.count());
  client.set_write_timeout(seconds.count(), micros.count());

  httplib::Headers headers;
  if (!options_.api_key.empty()) headers.emplace("Authorization", "Bearer " + options_.api_key);

  std::string last_error = "no attempt made";
  std::chrono::milliseconds backoff = options_.initial_backoff;
  for (int attempt = 0; attempt <= options_.max_retries; ++attempt) {
    if (attempt > 0) {
      std::this_thread::sleep_for(backoff);
      backoff *= 2;
    }
    auto response = client.Post(path_, headers, body, "application/json");
    if (!response) {
      last_error = "transport error: " + httplib::to_string(response.error());
      continue;
    }
    if (response->status != 200) {
      last_error = "HTTP " + std::to_string(response->status);
      if (retryable(response->status)) continue;
      break;
    }
    try {
      const json reply = json::parse(response->body);
      return reply.at("choices").at(0).at("message").at("content").get<std::string>();
    } catch (const json::exception& e) {
      throw Error(ErrorCode::kBackendUnavailable, std::string("malformed completion response: ") + e.what());
    }
  }
  throw Error(ErrorCode::kBackendUnavailable, "chat completion failed: " + last_error);
}

}  // namespace vizchat
