#pragma once

#include <memory>
#include <string>

#include "vizchat/error.hpp"
#include "vizchat/gateway/session_manager.hpp"

namespace vizchat {

/// HTTP status for an error code surfaced by the API.
int http_status(ErrorCode code) noexcept;

/// JSON API over a SessionManager.
///
///   GET  /models                         {"models": [...]}
///   POST /sessions                       {"model"}  -> 201 {"session_id"}
///   DELETE /sessions/{id}
///   POST /sessions/{id}/query            {"text"}   -> query result
///   POST /sessions/{id}/select           {"index"}  -> query result
///   GET  /sessions/{id}/state                       -> state snapshot
///   POST /sessions/{id}/speech-complete             -> {"signalled"}
///
/// Errors come back as {"error": "<code>", "message": "..."}.
class HttpService {
 public:
  explicit HttpService(SessionManager& sessions);
  ~HttpService();

  HttpService(const HttpService&) = delete;
  HttpService& operator=(const HttpService&) = delete;

  /// Returns the bound port; `port` 0 picks a free one. Throws on failure.
  int bind(const std::string& host, int port);
  /// Blocks until stop().
  void listen();
  void stop();
  bool running() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace vizchat
