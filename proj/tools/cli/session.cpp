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

#include "session.hpp"

#include <iostream>

#include "capp/memory_image.hpp"
#include "capp/serve.hpp"
#include "capp/transport.hpp"

namespace capp::cli {

Session::Session(const SessionOptions& options) : config_(options.config) {
  try {
    config_.validate();
  } catch (const ConfigError& e) {
    throw UsageError(e.what());
  }

  if (options.trace) {
    trace_file_ = std::make_unique<std::ofstream>(*options.trace);
    if (!*trace_file_) throw UsageError("cannot open trace file '" + options.trace->string() + "'");
    trace_ = std::make_unique<TraceWriter>(*trace_file_);
  }

  if (options.connect) {
    if (options.image) throw UsageError("--image applies to embedded or served devices only");
    std::unique_ptr<ByteTransport> stream = TcpStream::connect(*options.connect);
    if (trace_) stream = std::make_unique<TracingTransport>(std::move(stream), *trace_);
    client_ = std::make_unique<Client>(std::move(stream), config_);
    return;
  }

  Capp capp(config_);
  if (options.image) capp.load_image(read_image_file(*options.image, config_));
  device_ = std::make_unique<Device>(std::move(capp));

  auto [host_end, device_end] = make_loopback();
  client_ = std::make_unique<Client>(std::move(host_end), config_);
  device_thread_ = std::thread([device = device_.get(), end = std::move(device_end),
                                trace = trace_.get()]() mutable {
    try {
      serve(*device, *end, trace);
    } catch (const std::exception& e) {
      std::cerr << "embedded device stopped: " << e.what() << '\n';
    }
    end->close();
  });
}

Session::~Session() {
  if (client_) client_->close();
  if (device_thread_.joinable()) device_thread_.join();
}

std::uint64_t Session::cycles() const {
  return device_ ? device_->cycles() : client_->expected_cycles();
}

}  // namespace capp::cli
