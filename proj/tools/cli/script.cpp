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

#include "script.hpp"

#include <array>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <utility>

#include "capp/memory_image.hpp"
#include "capp/protocol.hpp"

namespace capp::cli {
namespace {

struct Keyword {
  std::string_view name;
  CommandKind kind;
  bool takes_argument;
};

constexpr std::array<Keyword, 14> kKeywords{{
    {"tags-set", CommandKind::kTagsSet, false},
    {"tags-clear", CommandKind::kTagsClear, false},
    {"comparand", CommandKind::kComparand, true},
    {"mask", CommandKind::kMask, true},
    {"search", CommandKind::kSearch, false},
    {"refine", CommandKind::kRefine, false},
    {"select", CommandKind::kSelect, false},
    {"read", CommandKind::kRead, false},
    {"write", CommandKind::kWrite, false},
    {"status", CommandKind::kStatus, false},
    {"load-image", CommandKind::kLoadImage, true},
    {"dump-image", CommandKind::kDumpImage, true},
    {"expect", CommandKind::kExpect, true},
    {"expect-some", CommandKind::kExpectSome, true},
}};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

bool parse_bool(std::string_view text) {
  if (text == "true" || text == "some" || text == "1" || text == "yes") return true;
  if (text == "false" || text == "none" || text == "0" || text == "no") return false;
  throw UsageError("expected true/false (or some/none), got '" + std::string(text) + "'");
}

template <class Bits>
Bits parse_word(std::string_view text, std::size_t width) {
  try {
    return Bits::from_hex(width, text);
  } catch (const WidthError& e) {
    throw UsageError(e.what());
  }
}

}  // namespace

std::optional<ScriptCommand> parse_command(std::string_view line) {
  if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
  line = trim(line);
  if (line.empty()) return std::nullopt;

  const auto space = line.find_first_of(" \t");
  const std::string_view name = line.substr(0, space);
  const std::string_view rest = space == std::string_view::npos ? "" : trim(line.substr(space));

  for (const auto& kw : kKeywords) {
    if (kw.name != name) continue;
    if (kw.takes_argument && rest.empty()) {
      throw UsageError("'" + std::string(name) + "' needs an argument");
    }
    if (!kw.takes_argument && !rest.empty()) {
      throw UsageError("'" + std::string(name) + "' takes no argument");
    }
    return ScriptCommand{kw.kind, std::string(rest)};
  }
  throw UsageError("unknown command '" + std::string(name) + "'");
}

std::vector<CappConfig> script_geometries(std::istream& in) {
  std::vector<CappConfig> out;
  std::string line;
  while (std::getline(in, line)) {
    const auto pos = line.find("geometries:");
    if (line.rfind('#', 0) != 0 || pos == std::string::npos) continue;
    std::istringstream items(line.substr(pos + 11));
    std::string item;
    while (items >> item) {
      CappConfig c;
      char x = 0;
      std::istringstream parts(item);
      if (!(parts >> c.word_bits >> x >> c.num_cells) || x != 'x') {
        throw UsageError("bad geometry '" + item + "' (expected WIDTHxCELLS)");
      }
      out.push_back(c);
    }
    break;
  }
  return out;
}

ScriptRunner::ScriptRunner(Session& session, std::ostream& out, ScriptOptions options)
    : session_(session),
      out_(out),
      options_(std::move(options)),
      comparand_(session.config().word_bits),
      mask_(session.config().word_bits) {}

std::filesystem::path ScriptRunner::resolve(const std::string& path) const {
  std::filesystem::path p(path);
  if (p.is_relative() && !options_.base_dir.empty()) p = options_.base_dir / p;
  return p;
}

void ScriptRunner::report_cycles(std::uint64_t before) {
  if (!options_.cycles) return;
  const std::uint64_t now = session_.cycles();
  char buf[96];
  std::snprintf(buf, sizeof(buf), "  cycles: +%llu (total %llu, %.3f us)\n",
                static_cast<unsigned long long>(now - before),
                static_cast<unsigned long long>(now), cycles_to_microseconds(now));
  out_ << buf;
}

ScriptRunner::Outcome ScriptRunner::execute(std::string_view line, std::size_t lineno) {
  const auto cmd = parse_command(line);
  if (!cmd) return Outcome::kOk;

  const std::size_t width = session_.config().word_bits;
  Client& client = session_.client();
  const std::uint64_t before = session_.cycles();

  switch (cmd->kind) {
    case CommandKind::kTagsSet:
      client.reset_tags();
      break;
    case CommandKind::kTagsClear:
      client.clear_tags();
      break;
    case CommandKind::kComparand:
      comparand_ = parse_word<Word>(cmd->argument, width);
      client.load_comparand(comparand_);
      break;
    case CommandKind::kMask:
      mask_ = parse_word<Mask>(cmd->argument, width);
      client.load_mask(mask_);
      break;
    case CommandKind::kSearch:
      client.search({comparand_, mask_});
      break;
    case CommandKind::kRefine:
      client.refine({comparand_, mask_});
      break;
    case CommandKind::kSelect:
      client.select_first();
      break;
    case CommandKind::kRead:
      last_read_ = client.read_word();
      out_ << last_read_->to_hex() << '\n';
      break;
    case CommandKind::kWrite:
      client.write();
      break;
    case CommandKind::kStatus:
      out_ << (client.some_none() ? "some" : "none") << '\n';
      break;

    case CommandKind::kLoadImage: {
      Device* device = session_.device();
      if (!device) throw UsageError("load-image needs an embedded device");
      const auto words = read_image_file(resolve(cmd->argument), session_.config());
      device->capp().load_image(words);
      out_ << "loaded " << words.size() << " words\n";
      return Outcome::kOk;
    }
    case CommandKind::kDumpImage: {
      Device* device = session_.device();
      if (!device) throw UsageError("dump-image needs an embedded device");
      write_image_file(resolve(cmd->argument), device->capp().cells());
      out_ << "dumped " << device->capp().cells().size() << " cells\n";
      return Outcome::kOk;
    }

    case CommandKind::kExpect: {
      const Word want = parse_word<Word>(cmd->argument, width);
      if (!last_read_) throw UsageError("expect before any read");
      if (*last_read_ != want) {
        out_ << "line " << lineno << ": expected " << want.to_hex() << ", got "
             << last_read_->to_hex() << '\n';
        return Outcome::kExpectationFailed;
      }
      out_ << "ok\n";
      return Outcome::kOk;
    }
    case CommandKind::kExpectSome: {
      const bool want = parse_bool(cmd->argument);
      const bool got = client.some_none();
      report_cycles(before);
      if (got != want) {
        out_ << "line " << lineno << ": expected " << (want ? "some" : "none") << ", got "
             << (got ? "some" : "none") << '\n';
        return Outcome::kExpectationFailed;
      }
      out_ << "ok\n";
      return Outcome::kOk;
    }
  }
  report_cycles(before);
  return Outcome::kOk;
}

int ScriptRunner::run(std::istream& in, std::ostream& err) {
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    try {
      if (execute(line, lineno) == Outcome::kExpectationFailed) {
        err << "expectation failed at line " << lineno << '\n';
        return kExitExpectation;
      }
    } catch (const std::exception& e) {
      err << "line " << lineno << ": error: " << e.what() << '\n';
      return kExitUsage;
    }
  }
  return kExitOk;
}

void ScriptRunner::repl(std::istream& in, std::ostream& err, bool prompt) {
  std::string line;
  std::size_t lineno = 0;
  for (;;) {
    if (prompt) out_ << "capp> " << std::flush;
    if (!std::getline(in, line)) break;
    ++lineno;
    if (trim(line) == "quit" || trim(line) == "exit") break;
    try {
      execute(line, lineno);
    } catch (const UsageError& e) {
      err << "error: " << e.what() << '\n';
    } catch (const ImageError& e) {
      err << "error: " << e.what() << '\n';
    }
  }
  if (prompt) out_ << '\n';
}

}  // namespace capp::cli
