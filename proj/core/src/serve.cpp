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

#include "capp/serve.hpp"

#include <optional>
#include <vector>

namespace capp {
namespace {

void emit(ByteTransport& transport, TraceWriter* trace, const std::vector<std::uint8_t>& out,
          std::uint64_t cycle) {
  if (out.empty()) return;
  if (trace) trace->record(Direction::kTx, out, cycle);
  transport.write(out);
}

}  // namespace

void serve(Device& device, ByteTransport& transport, TraceWriter* trace) {
  for (;;) {
    while (device.busy()) emit(transport, trace, device.step(std::nullopt), device.cycles());

    const auto byte = transport.read_byte();
    if (!byte) return;
    const auto out = device.step(*byte);
    if (trace) trace->record(Direction::kRx, *byte, device.cycles());
    emit(transport, trace, out, device.cycles());
  }
}

}  // namespace capp
