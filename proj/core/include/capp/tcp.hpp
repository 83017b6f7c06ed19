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

#ifndef CAPP_TCP_HPP
#define CAPP_TCP_HPP

#include <array>
#include <chrono>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>

#include "capp/transport.hpp"

namespace capp {

struct Endpoint {
  std::string host;
  std::uint16_t port = 0;

  /// Parses "HOST:PORT" (IPv4 dotted quad or host name). Throws TransportError.
  static Endpoint parse(std::string_view text);
  std::string to_string() const { return host + ":" + std::to_string(port); }
};

/// RAII file descriptor.
class Socket {
 public:
  Socket() = default;
  explicit Socket(int fd) noexcept : fd_(fd) {}
  Socket(Socket&& other) noexcept : fd_(std::exchange(other.fd_, -1)) {}
  Socket& operator=(Socket&& other) noexcept;
  Socket(const Socket&) = delete;
  Socket& operator=(const Socket&) = delete;
  ~Socket() { reset(); }

  int fd() const noexcept { return fd_; }
  bool valid() const noexcept { return fd_ >= 0; }
  void reset() noexcept;

 private:
  int fd_ = -1;
};

/// Raw byte stream over a connected TCP socket, no framing.
class TcpStream final : public ByteTransport {
 public:
  explicit TcpStream(Socket socket);

  static std::unique_ptr<TcpStream> connect(const Endpoint& endpoint);

  std::optional<std::uint8_t> read_byte() override;
  void write(std::span<const std::uint8_t> bytes) override;
  void close() override;

 private:
  Socket socket_;
  std::array<std::uint8_t, 4096> buffer_{};
  std::size_t head_ = 0;
  std::size_t tail_ = 0;
  bool eof_ = false;
};

class TcpListener {
 public:
  /// Binds and listens. Port 0 picks an ephemeral port; see port().
  explicit TcpListener(const Endpoint& endpoint);

  std::uint16_t port() const noexcept { return port_; }
  Endpoint local_endpoint() const { return {host_, port_}; }

  /// Waits up to `timeout` for a connection; nullptr on timeout.
  std::unique_ptr<TcpStream> accept(std::chrono::milliseconds timeout);

 private:
  Socket socket_;
  std::string host_;
  std::uint16_t port_ = 0;
};

}  // namespace capp

#endif  // CAPP_TCP_HPP
