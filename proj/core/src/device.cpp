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

#include "capp/device.hpp"

#include <utility>

namespace capp {

std::string_view phase_name(FsmPhase phase) noexcept {
  switch (phase) {
    case FsmPhase::kReady: return "READY";
    case FsmPhase::kReceive: return "RECEIVE";
    case FsmPhase::kSearch1: return "SEARCH_1";
    case FsmPhase::kIdle: return "IDLE";
    case FsmPhase::kSearch2: return "SEARCH_2";
    case FsmPhase::kSelect1: return "SELECT_1";
    case FsmPhase::kSelect2: return "SELECT_2";
    case FsmPhase::kSend: return "SEND";
    case FsmPhase::kWriteApply: return "WRITE_APPLY";
    case FsmPhase::kSetPulse: return "SET_PULSE";
    case FsmPhase::kClearPulse: return "CLEAR_PULSE";
  }
  return "?";
}

Device::Device(CappConfig config) : capp_(config) {}

Device::Device(Capp capp) : capp_(std::move(capp)) {}

std::vector<std::uint8_t> Device::step(std::optional<std::uint8_t> input) {
  ++cycles_;
  std::vector<std::uint8_t> out;

  switch (fsm_.phase) {
    case FsmPhase::kReady: {
      last_ = FsmPhase::kReady;
      if (!input) break;
      if (const auto op = decode_opcode(*input)) {
        dispatch(*op, out);
      } else {
        out.push_back(kNak);
      }
      break;
    }

    case FsmPhase::kReceive: {
      last_ = FsmPhase::kReceive;
      if (!input) break;  // waiting on the host
      receive_buffer_.push_back(*input);
      if (--fsm_.countdown == 0) {
        if (fsm_.target == ReceiveTarget::kComparand) {
          capp_.load_comparand(Word(BitVector::from_bytes(receive_buffer_)));
        } else {
          capp_.load_mask(Mask(BitVector::from_bytes(receive_buffer_)));
        }
        out.push_back(kAck);
        enter_ready();
      }
      break;
    }

    case FsmPhase::kIdle: {
      last_ = FsmPhase::kIdle;
      if (input) out.push_back(kNak);
      if (--fsm_.countdown == 0) {
        fsm_.phase = fsm_.successor;
        fsm_.successor = FsmPhase::kReady;
      }
      break;
    }

    case FsmPhase::kSearch2: {
      last_ = FsmPhase::kSearch2;
      if (input) out.push_back(kNak);
      // Tags latch the mismatch lines when SEARCH is released.
      capp_.search_pulse();
      search_line_ = false;
      out.push_back(kAck);
      enter_ready();
      break;
    }

    case FsmPhase::kSelect2: {
      last_ = FsmPhase::kSelect2;
      if (input) out.push_back(kNak);
      capp_.select_first();
      select_line_ = false;
      out.push_back(kAck);
      enter_ready();
      break;
    }

    case FsmPhase::kSend: {
      last_ = FsmPhase::kSend;
      if (input) out.push_back(kNak);
      out.push_back(send_buffer_[send_buffer_.size() - fsm_.countdown]);
      if (--fsm_.countdown == 0) {
        out.push_back(kAck);
        enter_ready();
      }
      break;
    }

    // Entry micro-steps run inside dispatch(); the machine never rests here.
    case FsmPhase::kSearch1:
    case FsmPhase::kSelect1:
    case FsmPhase::kWriteApply:
    case FsmPhase::kSetPulse:
    case FsmPhase::kClearPulse:
      enter_ready();
      break;
  }
  return out;
}

void Device::dispatch(Opcode op, std::vector<std::uint8_t>& out) {
  switch (op) {
    case Opcode::kSetTags:
      last_ = FsmPhase::kSetPulse;
      capp_.set_all_tags();
      out.push_back(kAck);
      break;

    case Opcode::kClearTags:
      last_ = FsmPhase::kClearPulse;
      capp_.clear_all_tags();
      out.push_back(kAck);
      break;

    case Opcode::kWrite:
      last_ = FsmPhase::kWriteApply;
      capp_.write_parallel();
      out.push_back(kAck);
      break;

    case Opcode::kLoadComparand:
    case Opcode::kLoadMask:
      last_ = FsmPhase::kReceive;
      receive_buffer_.clear();
      fsm_.phase = FsmPhase::kReceive;
      fsm_.countdown = static_cast<std::uint32_t>(capp_.config().word_bytes());
      fsm_.target =
          op == Opcode::kLoadComparand ? ReceiveTarget::kComparand : ReceiveTarget::kMask;
      break;

    case Opcode::kSearch:
      last_ = FsmPhase::kSearch1;
      search_line_ = true;
      fsm_.phase = FsmPhase::kIdle;
      fsm_.countdown = kPulseDelayCycles;
      fsm_.successor = FsmPhase::kSearch2;
      break;

    case Opcode::kSelectFirst:
      last_ = FsmPhase::kSelect1;
      select_line_ = true;
      fsm_.phase = FsmPhase::kIdle;
      fsm_.countdown = kPulseDelayCycles;
      fsm_.successor = FsmPhase::kSelect2;
      break;

    case Opcode::kRead:
      last_ = FsmPhase::kSend;
      send_buffer_ = capp_.read_or().to_bytes();
      fsm_.phase = FsmPhase::kSend;
      fsm_.countdown = static_cast<std::uint32_t>(send_buffer_.size());
      break;

    case Opcode::kStatus:
      last_ = FsmPhase::kSend;
      send_buffer_.assign(1, capp_.any_tag() ? 0x01 : 0x00);
      fsm_.phase = FsmPhase::kSend;
      fsm_.countdown = 1;
      break;
  }
}

void Device::enter_ready() { fsm_ = FsmState{}; }

std::vector<std::uint8_t> Device::run_until_ready(std::span<const std::uint8_t> input) {
  std::vector<std::uint8_t> out;
  auto append = [&out](const std::vector<std::uint8_t>& bytes) {
    out.insert(out.end(), bytes.begin(), bytes.end());
  };
  for (const std::uint8_t b : input) {
    while (busy()) append(step(std::nullopt));
    append(step(b));
  }
  while (busy()) append(step(std::nullopt));
  return out;
}

std::optional<std::string> Device::invariant_violation() const {
  const auto word_bytes = capp_.config().word_bytes();
  switch (fsm_.phase) {
    case FsmPhase::kReady:
      if (fsm_.countdown != 0) return "READY with nonzero countdown";
      if (search_line_ || select_line_) return "control line left asserted in READY";
      return std::nullopt;
    case FsmPhase::kReceive:
      if (fsm_.countdown == 0 || fsm_.countdown > word_bytes) return "RECEIVE countdown out of range";
      if (receive_buffer_.size() + fsm_.countdown != word_bytes) {
        return "RECEIVE countdown inconsistent with received bytes";
      }
      return std::nullopt;
    case FsmPhase::kIdle:
      if (fsm_.countdown == 0 || fsm_.countdown > kPulseDelayCycles) {
        return "IDLE countdown out of range";
      }
      if (fsm_.successor == FsmPhase::kSearch2) {
        if (!search_line_) return "SEARCH line low during search delay";
      } else if (fsm_.successor == FsmPhase::kSelect2) {
        if (!select_line_) return "SELECT line low during select delay";
      } else {
        return "IDLE successor is neither SEARCH_2 nor SELECT_2";
      }
      return std::nullopt;
    case FsmPhase::kSearch2:
    case FsmPhase::kSelect2:
      return std::nullopt;
    case FsmPhase::kSend:
      if (fsm_.countdown == 0 || fsm_.countdown > send_buffer_.size()) {
        return "SEND countdown out of range";
      }
      return std::nullopt;
    default:
      return "resting in entry micro-step " + std::string(phase_name(fsm_.phase));
  }
}

}  // namespace capp
