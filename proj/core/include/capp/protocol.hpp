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

#ifndef CAPP_PROTOCOL_HPP
#define CAPP_PROTOCOL_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

#include "capp/config.hpp"

namespace capp {

/// Command bytes accepted by the device in the READY state.
enum class Opcode : std::uint8_t {
  kSetTags = 0x01,
  kLoadComparand = 0x02,
  kLoadMask = 0x03,
  kSearch = 0x04,
  kSelectFirst = 0x05,
  kRead = 0x06,
  kWrite = 0x07,
  kStatus = 0x08,
  kClearTags = 0x09,
};

inline constexpr std::uint8_t kAck = 0xAA;
inline constexpr std::uint8_t kNak = 0x55;

/// Device clock used to convert cycle counts to wall time.
inline constexpr double kClockHz = 48'000'000.0;

/// Delay inserted between asserting and releasing the SEARCH / SELECT line.
inline constexpr std::uint32_t kPulseDelayCycles = 5;

std::optional<Opcode> decode_opcode(std::uint8_t byte) noexcept;
std::string_view opcode_name(Opcode op) noexcept;

constexpr std::uint8_t to_byte(Opcode op) noexcept { return static_cast<std::uint8_t>(op); }

/// Payload bytes following the opcode on the wire (host to device).
std::size_t request_payload_bytes(Opcode op, const CappConfig& config) noexcept;

/// Bytes the device sends back, including the trailing ACK.
std::size_t response_bytes(Opcode op, const CappConfig& config) noexcept;

/// Device cycles from consuming the opcode to emitting the ACK, assuming
/// payload bytes arrive back to back. The device reports the same figure
/// through its cycle counter; hosts use this to account time remotely.
///
///   SET_TAGS, CLEAR_TAGS, WRITE   1
///   SEARCH, SELECT_FIRST          1 + kPulseDelayCycles + 1
///   LOAD_COMPARAND, LOAD_MASK     1 + word_bytes
///   READ                          1 + word_bytes
///   STATUS                        2
std::uint64_t command_cycles(Opcode op, const CappConfig& config) noexcept;

/// Cycles spent rejecting an unknown opcode.
inline constexpr std::uint64_t kRejectCycles = 1;

constexpr double cycles_to_microseconds(std::uint64_t cycles) noexcept {
  return static_cast<double>(cycles) * 1e6 / kClockHz;
}

}  // namespace capp

#endif  // CAPP_PROTOCOL_HPP
