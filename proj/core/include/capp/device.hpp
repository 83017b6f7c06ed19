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

#ifndef CAPP_DEVICE_HPP
#define CAPP_DEVICE_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "capp/capp.hpp"
#include "capp/protocol.hpp"

namespace capp {

/// Micro-steps of the device state machine.
///
/// SEARCH_1, SELECT_1, SET_PULSE, CLEAR_PULSE and WRITE_APPLY are entry
/// micro-steps: they execute in the same cycle that consumes the opcode, so
/// the machine never rests in them. The other phases are where it waits
/// between cycles. RECEIVE serves both LOAD_COMPARAND and LOAD_MASK; IDLE
/// serves both SEARCH and SELECT_FIRST.
enum class FsmPhase : std::uint8_t {
  kReady,
  kReceive,
  kSearch1,
  kIdle,
  kSearch2,
  kSelect1,
  kSelect2,
  kSend,
  kWriteApply,
  kSetPulse,
  kClearPulse,
};

std::string_view phase_name(FsmPhase phase) noexcept;

enum class ReceiveTarget : std::uint8_t { kComparand, kMask };

struct FsmState {
  FsmPhase phase = FsmPhase::kReady;
  /// RECEIVE: payload bytes still expected. IDLE: delay cycles left.
  /// SEND: bytes still to transmit. Zero in READY.
  std::uint32_t countdown = 0;
  ReceiveTarget target = ReceiveTarget::kComparand;  // RECEIVE only
  FsmPhase successor = FsmPhase::kReady;             // IDLE only

  friend bool operator==(const FsmState&, const FsmState&) = default;
};

/// Emulated CAPP peripheral: the state machine that sits between the host
/// byte stream and the CAPP array.
///
/// Each call to step() is one device clock cycle and one micro-step. In READY
/// an input byte is decoded as an opcode; RECEIVE shifts in one payload byte
/// per cycle, most significant byte first; SEND shifts out one byte per cycle.
/// Completed commands answer ACK. Unknown opcodes and bytes that arrive while
/// the machine is busy (not READY and not RECEIVE) answer NAK and are dropped
/// without disturbing the command in progress.
class Device {
 public:
  explicit Device(CappConfig config = {});
  explicit Device(Capp capp);

  /// Advances one cycle. At most one input byte per cycle.
  std::vector<std::uint8_t> step(std::optional<std::uint8_t> input);

  /// Feeds `input` in order, running busy phases to completion between bytes
  /// and after the last byte. Stops in READY, or in RECEIVE if the input ends
  /// inside a payload.
  std::vector<std::uint8_t> run_until_ready(std::span<const std::uint8_t> input);

  /// True when the next input byte would be consumed (READY or RECEIVE).
  bool accepting() const noexcept {
    return fsm_.phase == FsmPhase::kReady || fsm_.phase == FsmPhase::kReceive;
  }
  bool busy() const noexcept { return !accepting(); }
  bool ready() const noexcept { return fsm_.phase == FsmPhase::kReady; }

  const FsmState& state() const noexcept { return fsm_; }
  /// Micro-step executed by the most recent step() call.
  FsmPhase last_micro_step() const noexcept { return last_; }
  std::uint64_t cycles() const noexcept { return cycles_; }

  /// "Perform search" and "select first" control lines.
  bool search_line() const noexcept { return search_line_; }
  bool select_line() const noexcept { return select_line_; }

  const Capp& capp() const noexcept { return capp_; }
  Capp& capp() noexcept { return capp_; }
  const CappConfig& config() const noexcept { return capp_.config(); }

  /// Description of the first broken state invariant, or nullopt.
  std::optional<std::string> invariant_violation() const;

 private:
  void dispatch(Opcode op, std::vector<std::uint8_t>& out);
  void enter_ready();

  Capp capp_;
  FsmState fsm_;
  FsmPhase last_ = FsmPhase::kReady;
  std::uint64_t cycles_ = 0;
  bool search_line_ = false;
  bool select_line_ = false;
  std::vector<std::uint8_t> receive_buffer_;
  std::vector<std::uint8_t> send_buffer_;
};

}  // namespace capp

#endif  // CAPP_DEVICE_HPP
