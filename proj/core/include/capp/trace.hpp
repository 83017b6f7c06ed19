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

#ifndef CAPP_TRACE_HPP
#define CAPP_TRACE_HPP

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <vector>

#include "capp/transport.hpp"

namespace capp {

// Trace file: one line per byte, "DIR HH CYCLE", e.g. "RX 04 17".
// DIR is relative to the side that wrote the trace: RX = received,
// TX = transmitted. Device-side traces put the device cycle in which the
// byte was consumed or produced in the last column; host-side traces have
// no clock and use the running byte ordinal instead.

enum class Direction : std::uint8_t { kRx, kTx };

struct TraceEntry {
  Direction direction = Direction::kRx;
  std::uint8_t byte = 0;
  std::uint64_t cycle = 0;

  friend bool operator==(const TraceEntry&, const TraceEntry&) = default;
};

class TraceWriter {
 public:
  explicit TraceWriter(std::ostream& out) : out_(out) {}

  void record(Direction dir, std::uint8_t byte, std::uint64_t cycle);
  void record(Direction dir, std::span<const std::uint8_t> bytes, std::uint64_t cycle);

 private:
  std::mutex mu_;
  std::ostream& out_;
};

/// Throws Error on a malformed line.
std::vector<TraceEntry> parse_trace(std::istream& in);

/// Bytes of one direction, in order.
std::vector<std::uint8_t> trace_bytes(std::span<const TraceEntry> entries, Direction dir);

/// Host-side decorator: records everything written (TX) and read (RX).
class TracingTransport final : public ByteTransport {
 public:
  TracingTransport(std::unique_ptr<ByteTransport> inner, TraceWriter& trace)
      : inner_(std::move(inner)), trace_(trace) {}

  std::optional<std::uint8_t> read_byte() override;
  void write(std::span<const std::uint8_t> bytes) override;
  void close() override { inner_->close(); }

 private:
  std::unique_ptr<ByteTransport> inner_;
  TraceWriter& trace_;
  std::uint64_t ordinal_ = 0;
};

}  // namespace capp

#endif  // CAPP_TRACE_HPP
