#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "test_support.hpp"
#include "vizchat/gateway/config.hpp"
#include "vizchat/gateway/desk_repl.hpp"

namespace vizchat {
namespace {

// Runs a script through the REPL the way voice_repl --mock-backend --echo does.
std::string transcript(const std::filesystem::path& script) {
  auto config = ServiceConfig::load_file(test::asset("config.json"));
  config.backend.kind = "mock";
  std::shared_ptr<const DialogueRouter> router = make_router(config);
  SessionManager sessions(load_models(config), router,
                          {config.spoken_rate, config.session_idle_timeout, config.rng_seed});
  std::ostringstream out;
  DeskRepl repl(sessions, "t4", out);
  repl.greet();
  std::ifstream in(script);
  repl.run(in, true);
  return out.str();
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  return lines;
}

TEST(ReplGolden, TranscriptsMatch) {
  const std::filesystem::path dir(VIZCHAT_GOLDEN_DIR);
  std::size_t checked = 0;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.path().extension() != ".script") continue;
    auto expected_path = entry.path();
    expected_path.replace_extension(".txt");
    const std::string actual = transcript(entry.path());
    if (std::getenv("VIZCHAT_UPDATE_GOLDEN")) {
      std::ofstream(expected_path) << actual;
      continue;
    }
    const auto expected = lines_of(test::read_file(expected_path));
    const auto got = lines_of(actual);
    for (std::size_t i = 0; i < std::max(expected.size(), got.size()); ++i) {
      ASSERT_EQ(i < got.size() ? got[i] : "<missing>", i < expected.size() ? expected[i] : "<missing>")
          << entry.path().filename() << " line " << i + 1;
    }
    ++checked;
  }
  if (!std::getenv("VIZCHAT_UPDATE_GOLDEN")) EXPECT_GE(checked, 1u);
}

TEST(ReplGolden, RunsAreReproducible) {
  const auto script = std::filesystem::path(VIZCHAT_GOLDEN_DIR) / "head_walk.script";
  EXPECT_EQ(transcript(script), transcript(script));
}

}  // namespace
}  // namespace vizchat
