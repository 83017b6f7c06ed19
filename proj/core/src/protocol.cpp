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

#include "capp/protocol.hpp"

namespace capp {

std::optional<Opcode> decode_opcode(std::uint8_t byte) noexcept {
  if (byte >= to_byte(Opcode::kSetTags) && byte <= to_byte(Opcode::kClearTags)) {
    return static_cast<Opcode>(byte);
  }
  return std::nullopt;
}

std::string_view opcode_name(Opcode op) noexcept {
  switch (op) {
    case Opcode::kSetTags: return "SET_TAGS";
    case Opcode::kLoadComparand: return "LOAD_COMPARAND";
    case Opcode::kLoadMask: return "LOAD_MASK";
    case Opcode::kSearch: return "SEARCH";
    case Opcode::kSelectFirst: return "SELECT_FIRST";
    case Opcode::kRead: return "READ";
    case Opcode::kWrite: return "WRITE";
    case Opcode::kStatus: return "STATUS";
    case Opcode::kClearTags: return "CLEAR_TAGS";
  }
  return "?";
}

std::size_t request_payload_bytes(Opcode op, const CappConfig& config) noexcept {
  switch (op) {
    case Opcode::kLoadComparand:
    case Opcode::kLoadMask:
      return config.word_bytes();
    default:
      return 0;
  }
}

std::size_t response_bytes(Opcode op, const CappConfig& config) noexcept {
  switch (op) {
    case Opcode::kRead: return config.word_bytes() + 1;
    case Opcode::kStatus: return 2;
    default: return 1;
  }
}

std::uint64_t command_cycles(Opcode op, const CappConfig& config) noexcept {
  switch (op) {
    case Opcode::kSetTags:
    case Opcode::kClearTags:
    case Opcode::kWrite:
      return 1;
    case Opcode::kSearch:
    case Opcode::kSelectFirst:
      return 1 + kPulseDelayCycles + 1;
    case Opcode::kLoadComparand:
    case Opcode::kLoadMask:
    case Opcode::kRead:
      return 1 + config.word_bytes();
    case Opcode::kStatus:
      return 2;
  }
  return 0;
}

}  // namespace capp
