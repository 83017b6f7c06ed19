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

#include "capp/trace.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "capp/error.hpp"

namespace capp {

void TraceWriter::record(Direction dir, std::uint8_t byte, std::uint64_t cycle) {
  char line[48];
  std::snprintf(line, sizeof(line), "%s %02X %llu\n", dir == Direction::kRx ? "RX" : "TX", byte,
                static_cast<unsigned long long>(cycle));
  std::lock_guard lock(mu_);
  out_ << line;
}

void TraceWriter::record(Direction dir, std::span<const std::uint8_t> bytes, std::uint64_t cycle) {
  for (const auto b : bytes) record(dir, b, cycle);
}

std::vector<TraceEntry> parse_trace(std::istream& in) {
  std::vector<TraceEntry> entries;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::string dir;
    std::string hex;
    unsigned long long cycle = 0;
    if (!(fields >> dir >> hex >> cycle) || (dir != "RX" && dir != "TX") || hex.size() != 2) {
      throw Error("trace line " + std::to_string(lineno) + ": malformed '" + line + "'");
    }
    std::size_t used = 0;
    const unsigned long value = std::stoul(hex, &used, 16);
    if (used != 2) throw Error("trace line " + std::to_string(lineno) + ": bad byte '" + hex + "'");
    entries.push_back({dir == "RX" ? Direction::kRx : Direction::kTx,
                       static_cast<std::uint8_t>(value), cycle});
  }
  return entries;
}

std::vector<std::uint8_t> trace_bytes(std::span<const TraceEntry> entries, Direction dir) {
  std::vector<std::uint8_t> out;
  for (const auto& e : entries) {
    if (e.direction == dir) out.push_back(e.byte);
  }
  return out;
}

std::optional<std::uint8_t> TracingTransport::read_byte() {
  const auto b = inner_->read_byte();
  if (b) trace_.record(Direction::kRx, *b, ordinal_++);
  return b;
}

void TracingTransport::write(std::span<const std::uint8_t> bytes) {
  inner_->write(bytes);
  for (const auto b : bytes) trace_.record(Direction::kTx, b, ordinal_++);
}

}  // namespace capp
