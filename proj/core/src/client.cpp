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

#include "capp/client.hpp"

#include <cstdio>
#include <stdexcept>
#include <string>

#include "capp/error.hpp"

namespace capp {
namespace {

std::string hex_byte(std::uint8_t b) {
  char buf[8];
  std::snprintf(buf, sizeof(buf), "0x%02X", b);
  return buf;
}

}  // namespace

Client::Client(std::unique_ptr<ByteTransport> transport, CappConfig geometry)
    : transport_(std::move(transport)), geometry_(geometry) {
  geometry_.validate();
  if (!transport_) throw std::invalid_argument("Client needs a transport");
}

std::vector<std::uint8_t> Client::transact(Opcode op, std::span<const std::uint8_t> payload,
                                           std::string_view phase) {
  std::vector<std::uint8_t> request;
  request.reserve(1 + payload.size());
  request.push_back(to_byte(op));
  request.insert(request.end(), payload.begin(), payload.end());
  transport_->write(request);
  expected_cycles_ += command_cycles(op, geometry_);

  const std::size_t expected = response_bytes(op, geometry_);
  std::vector<std::uint8_t> reply;
  reply.reserve(expected);
  const std::string where = std::string(phase) + " (" + std::string(opcode_name(op)) + ")";
  while (reply.size() < expected) {
    const auto b = transport_->read_byte();
    if (!b) {
      throw ProtocolError(where, "short read: channel closed after " + std::to_string(reply.size()) +
                                     " of " + std::to_string(expected) + " reply bytes");
    }
    // Commands without a data payload answer with a single byte.
    if (expected == 1 && *b == kNak) throw ProtocolError(where, "device answered NAK");
    reply.push_back(*b);
  }
  if (reply.back() != kAck) {
    throw ProtocolError(where, "expected ACK, got " + hex_byte(reply.back()));
  }
  reply.pop_back();
  return reply;
}

void Client::require_width(const BitVector& v, const char* what) const {
  if (v.width() != geometry_.word_bits) {
    throw WidthError(std::string(what) + " is " + std::to_string(v.width()) +
                     " bits wide, device words are " + std::to_string(geometry_.word_bits));
  }
}

void Client::load_comparand(const Word& w) {
  require_width(w, "comparand");
  transact(Opcode::kLoadComparand, w.to_bytes(), "load_comparand");
}

void Client::load_mask(const Mask& m) {
  require_width(m, "mask");
  transact(Opcode::kLoadMask, m.to_bytes(), "load_mask");
}

bool Client::some_none() {
  const auto reply = transact(Opcode::kStatus, {}, "some_none");
  last_status_ = (reply.at(0) & 0x01) != 0;
  return *last_status_;
}

Word Client::read_word() {
  const auto reply = transact(Opcode::kRead, {}, "read_word");
  return Word(BitVector::from_bytes(reply));
}

void Client::search(const SearchQuery& q) {
  require_width(q.comparand, "comparand");
  require_width(q.mask, "mask");
  transact(Opcode::kSetTags, {}, "search: reset tags");
  transact(Opcode::kLoadComparand, q.comparand.to_bytes(), "search: comparand");
  transact(Opcode::kLoadMask, q.mask.to_bytes(), "search: mask");
  transact(Opcode::kSearch, {}, "search: pulse");
}

void Client::refine(const SearchQuery& q) {
  require_width(q.comparand, "comparand");
  require_width(q.mask, "mask");
  transact(Opcode::kLoadComparand, q.comparand.to_bytes(), "refine: comparand");
  transact(Opcode::kLoadMask, q.mask.to_bytes(), "refine: mask");
  transact(Opcode::kSearch, {}, "refine: pulse");
}

void Client::multiwrite(const Word& value, const Mask& field_mask) {
  require_width(value, "value");
  require_width(field_mask, "field mask");
  transact(Opcode::kLoadComparand, value.to_bytes(), "multiwrite: value");
  transact(Opcode::kLoadMask, field_mask.to_bytes(), "multiwrite: mask");
  transact(Opcode::kWrite, {}, "multiwrite: write");
}

void Client::fill(const Word& pattern) {
  reset_tags();
  multiwrite(pattern, Mask::compare_all(geometry_.word_bits));
}

std::size_t Client::load_words(std::span<const Word> words, const Word& empty_pattern) {
  require_width(empty_pattern, "empty pattern");
  for (const auto& w : words) {
    require_width(w, "word");
    if (w == empty_pattern) {
      throw std::invalid_argument("load_words: word " + w.to_hex() + " equals the empty pattern");
    }
  }

  const Mask all_care = Mask::compare_all(geometry_.word_bits);
  std::size_t placed = 0;
  for (const auto& w : words) {
    search({empty_pattern, all_care});
    if (!some_none()) break;
    select_first();
    multiwrite(w, all_care);
    ++placed;
  }
  return placed;
}

std::vector<Word> Client::enumerate_matches(const SearchQuery& q, std::size_t fresh_bit) {
  const std::size_t width = geometry_.word_bits;
  require_width(q.comparand, "comparand");
  require_width(q.mask, "mask");
  if (fresh_bit >= width) throw std::invalid_argument("enumerate_matches: fresh bit out of range");
  if (!q.mask.test(fresh_bit)) {
    throw std::invalid_argument("enumerate_matches: query must ignore the fresh bit");
  }

  Mask marker_only = Mask::ignore_all(width);
  marker_only.reset(fresh_bit);
  Word marker_set(width);
  marker_set.set(fresh_bit);
  const Word marker_clear(width);

  std::vector<Word> found;
  for (;;) {
    search(q);
    refine({marker_set, marker_only});
    if (!some_none()) break;
    select_first();
    found.push_back(read_word());
    multiwrite(marker_clear, marker_only);
  }

  search(q);
  refine({marker_clear, marker_only});
  multiwrite(marker_set, marker_only);
  return found;
}

}  // namespace capp
