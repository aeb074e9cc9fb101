#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "pfcone/io.hpp"

namespace pfcone::cli {

// Exit codes: 0 command completed (verdicts such as "unsolvable" live in the
// JSON), 2 input or usage error, 3 numeric failure or internal inconsistency.
enum ExitCode { kOk = 0, kInputError = 2, kNumericError = 3 };

// One verb applied to parsed documents. Scalars are kept as text so they
// can be re-read in either numeric mode.
struct Request {
  std::string verb;  // analyze, solve1, solve2, cw, alt, check
  Json matrix;
  std::string mode = "auto";  // auto tries rational, then float on ModeMismatch
  std::string lambda;
  std::string shift;
  std::string property;
  std::optional<Json> b;
  std::optional<Json> x;
  std::optional<int> max_steps;
};

// The report document with a "mode" field added. Library exceptions
// propagate; `log` (if given) receives the float-fallback notice.
Json evaluate(const Request& r, std::ostream* log = nullptr);

// Maps a library exception to an exit code and an {"error", "message"} document.
int describe_error(const std::exception& e, Json& doc);

// Command-line front end. Exactly one JSON document is written to `out`;
// `err` receives human-readable diagnostics.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pfcone::cli
