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

#ifndef CAPP_TRANSPORT_HPP
#define CAPP_TRANSPORT_HPP

#include <condition_variable>
#include <cstdint>
#include <deque>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "capp/device.hpp"

namespace capp {

/// Bidirectional byte channel between a host and a device.
class ByteTransport {
 public:
  virtual ~ByteTransport() = default;

  /// Blocks for the next byte; nullopt once the peer has closed and all
  /// buffered bytes were consumed. Throws TransportError on I/O failure.
  virtual std::optional<std::uint8_t> read_byte() = 0;

  /// Throws TransportError if the channel is closed or broken.
  virtual void write(std::span<const std::uint8_t> bytes) = 0;

  virtual void close() = 0;
};

/// Thread-safe FIFO of bytes with end-of-stream.
class ByteQueue {
 public:
  void push(std::span<const std::uint8_t> bytes);
  std::optional<std::uint8_t> pop();
  void close();
  bool closed() const;

 private:
  mutable std::mutex mu_;
  std::condition_variable cv_;
  std::deque<std::uint8_t> bytes_;
  bool closed_ = false;
};

/// One end of an in-process duplex pipe. Closing either end closes both
/// directions; bytes already queued can still be read.
class LoopbackEnd final : public ByteTransport {
 public:
  LoopbackEnd(std::shared_ptr<ByteQueue> in, std::shared_ptr<ByteQueue> out)
      : in_(std::move(in)), out_(std::move(out)) {}
  ~LoopbackEnd() override { close(); }

  std::optional<std::uint8_t> read_byte() override { return in_->pop(); }
  void write(std::span<const std::uint8_t> bytes) override;
  void close() override;
  /// Half-close: the peer sees end of input, replies can still be read.
  void close_write() { out_->close(); }

 private:
  std::shared_ptr<ByteQueue> in_;
  std::shared_ptr<ByteQueue> out_;
};

/// Returns {host end, device end}.
std::pair<std::unique_ptr<LoopbackEnd>, std::unique_ptr<LoopbackEnd>> make_loopback();

/// Host-side transport that owns a device and runs it synchronously: every
/// write() is fed through Device::run_until_ready and the replies are
/// buffered for read_byte(). No threads; useful for tests and batch work.
class InProcessLink final : public ByteTransport {
 public:
  explicit InProcessLink(Device device) : device_(std::move(device)) {}

  std::optional<std::uint8_t> read_byte() override;
  void write(std::span<const std::uint8_t> bytes) override;
  void close() override { closed_ = true; }

  const Device& device() const noexcept { return device_; }
  Device& device() noexcept { return device_; }

 private:
  Device device_;
  std::deque<std::uint8_t> pending_;
  bool closed_ = false;
};

}  // namespace capp

#endif  // CAPP_TRANSPORT_HPP
