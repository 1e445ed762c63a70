#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "vizchat/gateway/session_manager.hpp"

namespace vizchat {

/// Line-oriented driver for one session, for trying the engine at a desk.
///
///   free text    ask a question or give a command
///   :select N    pick exploration option N (zero-based)
///   :done        report that the current scene's speech finished
///   :tick S      advance the clock by S seconds
///   :state       one-line summary of the session
///   :json        full state snapshot
///   :help        list these commands
///   :quit        leave
class DeskRepl {
 public:
  DeskRepl(SessionManager& sessions, std::string_view model, std::ostream& out);

  /// Prints the session's opening narration.
  void greet();
  /// Handles one input line; false once the user quits.
  bool handle(std::string_view line);
  /// Reads lines from `in` until end of input or :quit.
  void run(std::istream& in, bool echo = false);

  const std::string& session_id() const noexcept { return session_id_; }

 private:
  void print_result(const QueryResult& result);
  void print_state();

  SessionManager& sessions_;
  std::string session_id_;
  std::ostream& out_;
};

}  // namespace vizchat
