// HTTP front end: serves sessions over JSON until interrupted.

#include <csignal>
#include <iostream>
#include <memory>

#include <CLI11.hpp>

#include "vizchat/gateway/config.hpp"
#include "vizchat/gateway/http_service.hpp"
#include "vizchat/gateway/session_manager.hpp"

namespace {

vizchat::HttpService* g_service = nullptr;

void on_signal(int) {
  if (g_service) g_service->stop();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Conversational molecular-model viewer service"};
  std::string config_path = VIZCHAT_DEFAULT_CONFIG;
  std::string host;
  int port = -1;
  bool mock = false;
  app.add_option("-c,--config", config_path, "Service config file")->check(CLI::ExistingFile);
  app.add_option("--host", host, "Address to listen on (overrides config)");
  app.add_option("-p,--port", port, "Port to listen on, 0 for any (overrides config)");
  app.add_flag("--mock-backend", mock, "Use the offline mock bots instead of the configured backend");
  CLI11_PARSE(app, argc, argv);

  try {
    auto config = vizchat::ServiceConfig::load_file(config_path);
    if (mock) config.backend.kind = "mock";
    if (!host.empty()) config.host = host;
    if (port >= 0) config.port = port;

    std::shared_ptr<const vizchat::DialogueRouter> router = vizchat::make_router(config);
    vizchat::SessionManager sessions(vizchat::load_models(config), router,
                                     {config.spoken_rate, config.session_idle_timeout, config.rng_seed});
    sessions.start_ticker(config.tick_rate_hz);

    vizchat::HttpService service(sessions);
    const int bound = service.bind(config.host, config.port);
    g_service = &service;
    std::signal(SIGINT, on_signal);
    std::signal(SIGTERM, on_signal);
    std::cout << "listening on " << config.host << ":" << bound << " (" << config.backend.kind << " backend)"
              << std::endl;
    service.listen();
    g_service = nullptr;
    sessions.stop_ticker();
  } catch (const std::exception& e) {
    std::cerr << "vizchat_server: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
