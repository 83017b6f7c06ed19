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

#ifndef CAPP_SERVE_HPP
#define CAPP_SERVE_HPP

#include "capp/device.hpp"
#include "capp/trace.hpp"
#include "capp/transport.hpp"

namespace capp {

/// Runs `device` against `transport` until the peer closes the channel.
///
/// Busy phases are clocked to completion before the next byte is read, so a
/// host sees exactly the replies Device::run_until_ready would produce for the
/// same byte sequence. Returns normally on end-of-stream, leaving the device
/// in whatever state it reached (possibly mid-RECEIVE). TransportError from
/// the channel propagates to the caller.
void serve(Device& device, ByteTransport& transport, TraceWriter* trace = nullptr);

}  // namespace capp

#endif  // CAPP_SERVE_HPP
