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

#ifndef CAPP_CLI_SESSION_HPP
#define CAPP_CLI_SESSION_HPP

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <memory>
#include <optional>
#include <thread>

#include "capp/client.hpp"
#include "capp/config.hpp"
#include "capp/device.hpp"
#include "capp/error.hpp"
#include "capp/tcp.hpp"
#include "capp/trace.hpp"

namespace capp::cli {

/// Bad flags, unreadable files, or anything else that maps to exit code 2.
class UsageError : public Error {
 public:
  using Error::Error;
};

struct SessionOptions {
  CappConfig config;
  /// Remote device; when empty an embedded device is started in-process.
  std::optional<Endpoint> connect;
  /// Initial memory image for the embedded device.
  std::optional<std::filesystem::path> image;
  std::optional<std::filesystem::path> trace;
};

/// A client plus, in embedded mode, the device it talks to. The embedded
/// device runs serve() on its own thread behind a loopback channel.
class Session {
 public:
  explicit Session(const SessionOptions& options);
  ~Session();
  Session(const Session&) = delete;
  Session& operator=(const Session&) = delete;

  Client& client() noexcept { return *client_; }
  const CappConfig& config() const noexcept { return config_; }
  bool embedded() const noexcept { return device_ != nullptr; }

  /// The embedded device, or nullptr for a remote one. Only touch it between
  /// commands, while the device thread is parked waiting for input.
  Device* device() noexcept { return device_.get(); }

  /// Device cycles so far: measured for an embedded device, from the
  /// protocol cost model for a remote one.
  std::uint64_t cycles() const;

 private:
  CappConfig config_;
  std::unique_ptr<std::ofstream> trace_file_;
  std::unique_ptr<TraceWriter> trace_;
  std::unique_ptr<Device> device_;
  std::unique_ptr<Client> client_;
  std::thread device_thread_;
};

}  // namespace capp::cli

#endif  // CAPP_CLI_SESSION_HPP
