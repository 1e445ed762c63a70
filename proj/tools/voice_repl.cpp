// Talk to one model from the terminal. Reads queries from stdin (or a script).

#include <fstream>
#include <iostream>
#include <memory>

#include <CLI11.hpp>

#include "vizchat/gateway/config.hpp"
#include "vizchat/gateway/desk_repl.hpp"
#include "vizchat/gateway/session_manager.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Desk REPL for the molecular-model viewer"};
  std::string config_path = VIZCHAT_DEFAULT_CONFIG;
  std::string model = "t4";
  std::string script;
  bool mock = false;
  bool echo = false;
  app.add_option("-c,--config", config_path, "Service config file")->check(CLI::ExistingFile);
  app.add_option("-m,--model", model, "Model key from the config");
  app.add_option("-s,--script", script, "Read input lines from this file")->check(CLI::ExistingFile);
  app.add_flag("--mock-backend", mock, "Use the offline mock bots instead of the configured backend");
  app.add_flag("--echo", echo, "Echo each input line");
  CLI11_PARSE(app, argc, argv);

  try {
    auto config = vizchat::ServiceConfig::load_file(config_path);
    if (mock) config.backend.kind = "mock";
    std::shared_ptr<const vizchat::DialogueRouter> router = vizchat::make_router(config);
    vizchat::SessionManager sessions(vizchat::load_models(config), router,
                                     {config.spoken_rate, config.session_idle_timeout, config.rng_seed});
    vizchat::DeskRepl repl(sessions, model, std::cout);
    repl.greet();
    if (script.empty()) {
      repl.run(std::cin, echo);
    } else {
      std::ifstream in(script);
      repl.run(in, echo);
    }
  } catch (const std::exception& e) {
    std::cerr << "voice_repl: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
