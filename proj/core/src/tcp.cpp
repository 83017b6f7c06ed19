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

#include "capp/tcp.hpp"

#include <arpa/inet.h>
#include <netdb.h>
#include <netinet/in.h>
#include <netinet/tcp.h>
#include <poll.h>
#include <sys/socket.h>
#include <unistd.h>

#include <cerrno>
#include <charconv>
#include <cstring>

#include "capp/error.hpp"

namespace capp {
namespace {

[[noreturn]] void throw_errno(const std::string& what) {
  throw TransportError(what + ": " + std::strerror(errno));
}

sockaddr_in resolve(const Endpoint& endpoint) {
  addrinfo hints{};
  hints.ai_family = AF_INET;
  hints.ai_socktype = SOCK_STREAM;
  addrinfo* result = nullptr;
  const std::string port = std::to_string(endpoint.port);
  if (const int rc = ::getaddrinfo(endpoint.host.c_str(), port.c_str(), &hints, &result); rc != 0) {
    throw TransportError("cannot resolve '" + endpoint.host + "': " + ::gai_strerror(rc));
  }
  sockaddr_in addr{};
  std::memcpy(&addr, result->ai_addr, sizeof(addr));
  ::freeaddrinfo(result);
  return addr;
}

void set_nodelay(int fd) {
  int one = 1;
  ::setsockopt(fd, IPPROTO_TCP, TCP_NODELAY, &one, sizeof(one));
}

}  // namespace

Endpoint Endpoint::parse(std::string_view text) {
  const auto colon = text.rfind(':');
  if (colon == std::string_view::npos || colon == 0 || colon + 1 == text.size()) {
    throw TransportError("expected HOST:PORT, got '" + std::string(text) + "'");
  }
  const auto port_text = text.substr(colon + 1);
  unsigned value = 0;
  const auto [ptr, ec] = std::from_chars(port_text.data(), port_text.data() + port_text.size(), value);
  if (ec != std::errc{} || ptr != port_text.data() + port_text.size() || value > 65535) {
    throw TransportError("invalid port '" + std::string(port_text) + "'");
  }
  return {std::string(text.substr(0, colon)), static_cast<std::uint16_t>(value)};
}

Socket& Socket::operator=(Socket&& other) noexcept {
  if (this != &other) {
    reset();
    fd_ = std::exchange(other.fd_, -1);
  }
  return *this;
}

void Socket::reset() noexcept {
  if (fd_ >= 0) ::close(fd_);
  fd_ = -1;
}

TcpStream::TcpStream(Socket socket) : socket_(std::move(socket)) { set_nodelay(socket_.fd()); }

std::unique_ptr<TcpStream> TcpStream::connect(const Endpoint& endpoint) {
  const sockaddr_in addr = resolve(endpoint);
  Socket s(::socket(AF_INET, SOCK_STREAM, 0));
  if (!s.valid()) throw_errno("socket");
  if (::connect(s.fd(), reinterpret_cast<const sockaddr*>(&addr), sizeof(addr)) != 0) {
    throw_errno("connect to " + endpoint.to_string());
  }
  return std::make_unique<TcpStream>(std::move(s));
}

std::optional<std::uint8_t> TcpStream::read_byte() {
  if (head_ == tail_) {
    if (eof_ || !socket_.valid()) return std::nullopt;
    ssize_t n = 0;
    do {
      n = ::recv(socket_.fd(), buffer_.data(), buffer_.size(), 0);
    } while (n < 0 && errno == EINTR);
    if (n < 0) {
      if (errno == ECONNRESET) {
        eof_ = true;
        return std::nullopt;
      }
      throw_errno("recv");
    }
    if (n == 0) {
      eof_ = true;
      return std::nullopt;
    }
    head_ = 0;
    tail_ = static_cast<std::size_t>(n);
  }
  return buffer_[head_++];
}

void TcpStream::write(std::span<const std::uint8_t> bytes) {
  if (!socket_.valid()) throw TransportError("write on closed socket");
  std::size_t sent = 0;
  while (sent < bytes.size()) {
    const ssize_t n = ::send(socket_.fd(), bytes.data() + sent, bytes.size() - sent, MSG_NOSIGNAL);
    if (n < 0) {
      if (errno == EINTR) continue;
      throw_errno("send");
    }
    sent += static_cast<std::size_t>(n);
  }
}

void TcpStream::close() {
  if (socket_.valid()) ::shutdown(socket_.fd(), SHUT_RDWR);
  socket_.reset();
}

TcpListener::TcpListener(const Endpoint& endpoint) : host_(endpoint.host) {
  sockaddr_in addr = resolve(endpoint);
  socket_ = Socket(::socket(AF_INET, SOCK_STREAM, 0));
  if (!socket_.valid()) throw_errno("socket");
  int one = 1;
  ::setsockopt(socket_.fd(), SOL_SOCKET, SO_REUSEADDR, &one, sizeof(one));
  if (::bind(socket_.fd(), reinterpret_cast<const sockaddr*>(&addr), sizeof(addr)) != 0) {
    throw_errno("bind " + endpoint.to_string());
  }
  if (::listen(socket_.fd(), 1) != 0) throw_errno("listen");
  socklen_t len = sizeof(addr);
  if (::getsockname(socket_.fd(), reinterpret_cast<sockaddr*>(&addr), &len) != 0) {
    throw_errno("getsockname");
  }
  port_ = ntohs(addr.sin_port);
}

std::unique_ptr<TcpStream> TcpListener::accept(std::chrono::milliseconds timeout) {
  pollfd pfd{socket_.fd(), POLLIN, 0};
  const int rc = ::poll(&pfd, 1, static_cast<int>(timeout.count()));
  if (rc < 0) {
    if (errno == EINTR) return nullptr;
    throw_errno("poll");
  }
  if (rc == 0) return nullptr;
  Socket s(::accept(socket_.fd(), nullptr, nullptr));
  if (!s.valid()) throw_errno("accept");
  return std::make_unique<TcpStream>(std::move(s));
}

}  // namespace capp
