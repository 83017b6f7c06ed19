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

#include "capp/transport.hpp"

#include "capp/error.hpp"

namespace capp {

void ByteQueue::push(std::span<const std::uint8_t> bytes) {
  {
    std::lock_guard lock(mu_);
    if (closed_) throw TransportError("write on closed channel");
    bytes_.insert(bytes_.end(), bytes.begin(), bytes.end());
  }
  cv_.notify_all();
}

std::optional<std::uint8_t> ByteQueue::pop() {
  std::unique_lock lock(mu_);
  cv_.wait(lock, [this] { return !bytes_.empty() || closed_; });
  if (bytes_.empty()) return std::nullopt;
  const std::uint8_t b = bytes_.front();
  bytes_.pop_front();
  return b;
}

void ByteQueue::close() {
  {
    std::lock_guard lock(mu_);
    closed_ = true;
  }
  cv_.notify_all();
}

bool ByteQueue::closed() const {
  std::lock_guard lock(mu_);
  return closed_;
}

void LoopbackEnd::write(std::span<const std::uint8_t> bytes) { out_->push(bytes); }

void LoopbackEnd::close() {
  out_->close();
  in_->close();
}

std::pair<std::unique_ptr<LoopbackEnd>, std::unique_ptr<LoopbackEnd>> make_loopback() {
  auto host_to_device = std::make_shared<ByteQueue>();
  auto device_to_host = std::make_shared<ByteQueue>();
  return {std::make_unique<LoopbackEnd>(device_to_host, host_to_device),
          std::make_unique<LoopbackEnd>(host_to_device, device_to_host)};
}

std::optional<std::uint8_t> InProcessLink::read_byte() {
  if (pending_.empty()) return std::nullopt;
  const std::uint8_t b = pending_.front();
  pending_.pop_front();
  return b;
}

void InProcessLink::write(std::span<const std::uint8_t> bytes) {
  if (closed_) throw TransportError("write on closed link");
  const auto out = device_.run_until_ready(bytes);
  pending_.insert(pending_.end(), out.begin(), out.end());
}

}  // namespace capp
