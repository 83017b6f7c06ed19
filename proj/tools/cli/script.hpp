// Copyright 2026 The capp-emu Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CAPP_CLI_SCRIPT_HPP
#define CAPP_CLI_SCRIPT_HPP

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "capp/bit_vector.hpp"
#include "session.hpp"

namespace capp::cli {

enum class CommandKind {
  kTagsSet,
  kTagsClear,
  kComparand,
  kMask,
  kSearch,
  kRefine,
  kSelect,
  kRead,
  kWrite,
  kStatus,
  kLoadImage,
  kDumpImage,
  kExpect,
  kExpectSome,
};

struct ScriptCommand {
  CommandKind kind;
  std::string argument;  // hex word, path or bool, depending on kind
};

/// Parses one script line. Returns nullopt for blank and comment lines;
/// throws UsageError for anything malformed.
std::optional<ScriptCommand> parse_command(std::string_view line);

/// Geometries a script declares in a "# geometries: 8x4 16x16" header line
/// (WIDTHxCELLS). Empty when there is no such line.
std::vector<CappConfig> script_geometries(std::istream& in);

/// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitExpectation = 1;
inline constexpr int kExitUsage = 2;

struct ScriptOptions {
  bool cycles = false;
  /// Relative image paths are resolved against this directory.
  std::filesystem::path base_dir;
};

/// Executes script commands against a session and prints their results.
class ScriptRunner {
 public:
  ScriptRunner(Session& session, std::ostream& out, ScriptOptions options = {});

  enum class Outcome { kOk, kExpectationFailed };

  /// Runs one line. Throws UsageError for malformed input and lets
  /// capp::Error from the device or files propagate.
  Outcome execute(std::string_view line, std::size_t lineno);

  /// Whole script; stops at the first failed expectation or error.
  /// Returns kExitOk, kExitExpectation or kExitUsage.
  int run(std::istream& in, std::ostream& err);

  /// Interactive loop; errors are reported and the session continues.
  void repl(std::istream& in, std::ostream& err, bool prompt);

 private:
  void report_cycles(std::uint64_t before);
  std::filesystem::path resolve(const std::string& path) const;

  Session& session_;
  std::ostream& out_;
  ScriptOptions options_;
  Word comparand_;
  Mask mask_;
  std::optional<Word> last_read_;
};

}  // namespace capp::cli

#endif  // CAPP_CLI_SCRIPT_HPP
