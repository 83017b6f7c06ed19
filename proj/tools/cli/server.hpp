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

#ifndef CAPP_CLI_SERVER_HPP
#define CAPP_CLI_SERVER_HPP

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stop_token>
#include <vector>

#include "capp/bit_vector.hpp"
#include "capp/config.hpp"
#include "capp/tcp.hpp"

namespace capp::cli {

struct ServerOptions {
  CappConfig config;
  Endpoint listen{"127.0.0.1", 7312};
  std::optional<std::filesystem::path> image;
  std::optional<std::filesystem::path> trace;
  /// Exit after the first connection closes.
  bool once = false;
};

/// TCP front end for an emulated device. One connection at a time; each
/// connection gets a fresh device, preloaded from the image if one is given.
class Server {
 public:
  /// Validates the geometry, loads the image and binds. Throws UsageError
  /// for bad options and TransportError when the address cannot be bound.
  explicit Server(ServerOptions options);

  std::uint16_t port() const noexcept { return listener_.port(); }

  /// Accepts and serves connections until `stop` is requested (or after one
  /// connection with `once`). Progress is logged to `log`.
  void run(std::stop_token stop, std::ostream& log);

 private:
  ServerOptions options_;
  std::vector<Word> image_;
  TcpListener listener_;
};

}  // namespace capp::cli

#endif  // CAPP_CLI_SERVER_HPP
