#include "vizchat/gateway/http_service.hpp"

#include <httplib.h>

#include <nlohmann/json.hpp>

#include "vizchat/gateway/snapshot.hpp"

namespace vizchat {
namespace {

using json = nlohmann::json;

constexpr const char* kJson = "application/json";

void send(httplib::Response& res, int status, const json& body) {
  res.status = status;
  res.set_content(body.dump(), kJson);
}

void send_error(httplib::Response& res, ErrorCode code, const std::string& message) {
  send(res, http_status(code), {{"error", to_string(code)}, {"message", message}});
}

json parse_body(const httplib::Request& req) {
  json body = json::parse(req.body, nullptr, false);
  if (body.is_discarded() || !body.is_object()) throw Error(ErrorCode::kBadRequest, "body must be a JSON object");
  return body;
}

template <typename Handler>
httplib::Server::Handler guarded(Handler handler) {
  return [handler](const httplib::Request& req, httplib::Response& res) {
    try {
      handler(req, res);
    } catch (const Error& e) {
      send_error(res, e.code(), e.what());
    } catch (const json::exception& e) {
      send_error(res, ErrorCode::kBadRequest, e.what());
    }
  };
}

}  // namespace

int http_status(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kUnknownSession:
    case ErrorCode::kUnknownModel:
    case ErrorCode::kUnknownNode:
      return 404;
    case ErrorCode::kBusy:
    case ErrorCode::kNoPendingOptions:
    case ErrorCode::kSignalWithoutScene:
      return 409;
    case ErrorCode::kIndexOutOfRange:
    case ErrorCode::kBadRequest:
    case ErrorCode::kParseError:
      return 400;
    case ErrorCode::kBackendUnavailable:
      return 503;
    default:
      return 500;
  }
}

struct HttpService::Impl {
  SessionManager& sessions;
  httplib::Server server;

  explicit Impl(SessionManager& s) : sessions(s) {}

  void routes() {
    server.Get("/models", guarded([this](const httplib::Request&, httplib::Response& res) {
      send(res, 200, {{"models", sessions.model_keys()}});
    }));

    server.Post("/sessions", guarded([this](const httplib::Request& req, httplib::Response& res) {
      const json body = parse_body(req);
      if (!body.contains("model") || !body["model"].is_string()) {
        throw Error(ErrorCode::kBadRequest, "'model' must be a string");
      }
      send(res, 201, {{"session_id", sessions.create_session(body["model"].get<std::string>())}});
    }));

    server.Delete(R"(/sessions/([^/]+))", guarded([this](const httplib::Request& req, httplib::Response& res) {
      if (!sessions.close_session(req.matches[1].str())) {
        throw Error(ErrorCode::kUnknownSession, "unknown session '" + req.matches[1].str() + "'");
      }
      res.status = 204;
    }));

    server.Post(R"(/sessions/([^/]+)/query)", guarded([this](const httplib::Request& req, httplib::Response& res) {
      const std::string id = req.matches[1].str();
      const json body = parse_body(req);
      if (!body.contains("text") || !body["text"].is_string()) {
        throw Error(ErrorCode::kBadRequest, "'text' must be a string");
      }
      QueryResult result = sessions.post_query(id, body["text"].get<std::string>());
      json reply;
      sessions.inspect(id, [&](const SessionState& state) { reply = to_json(result, state.tree()); });
      send(res, 200, reply);
    }));

    server.Post(R"(/sessions/([^/]+)/select)", guarded([this](const httplib::Request& req, httplib::Response& res) {
      const std::string id = req.matches[1].str();
      const json body = parse_body(req);
      if (!body.contains("index") || !body["index"].is_number_integer() || body["index"].get<long long>() < 0) {
        throw Error(ErrorCode::kBadRequest, "'index' must be a non-negative integer");
      }
      QueryResult result = sessions.post_selection(id, body["index"].get<std::size_t>());
      json reply;
      sessions.inspect(id, [&](const SessionState& state) { reply = to_json(result, state.tree()); });
      send(res, 200, reply);
    }));

    server.Get(R"(/sessions/([^/]+)/state)", guarded([this](const httplib::Request& req, httplib::Response& res) {
      send(res, 200, sessions.get_state(req.matches[1].str()));
    }));

    server.Post(R"(/sessions/([^/]+)/speech-complete)",
                guarded([this](const httplib::Request& req, httplib::Response& res) {
                  send(res, 200, {{"signalled", sessions.speech_complete(req.matches[1].str())}});
                }));
  }
};

HttpService::HttpService(SessionManager& sessions) : impl_(std::make_unique<Impl>(sessions)) { impl_->routes(); }

HttpService::~HttpService() { stop(); }

int HttpService::bind(const std::string& host, int port) {
  const int bound = port == 0 ? impl_->server.bind_to_any_port(host) : (impl_->server.bind_to_port(host, port) ? port : -1);
  if (bound < 0) throw std::runtime_error("cannot bind " + host + ":" + std::to_string(port));
  return bound;
}

void HttpService::listen() { impl_->server.listen_after_bind(); }

void HttpService::stop() { impl_->server.stop(); }

bool HttpService::running() const { return impl_->server.is_running(); }

}  // namespace vizchat
