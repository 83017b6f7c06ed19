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

#ifndef CAPP_CLIENT_HPP
#define CAPP_CLIENT_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "capp/bit_vector.hpp"
#include "capp/config.hpp"
#include "capp/protocol.hpp"
#include "capp/transport.hpp"

namespace capp {

/// Contents of the two search registers. Mask bit 1 = ignore.
struct SearchQuery {
  Word comparand;
  Mask mask;
};

/// Host-side driver for a CAPP device.
///
/// The protocol has no geometry query, so the geometry is supplied by the
/// caller and must match the device. Calls are blocking and strictly
/// ordered. Each call waits for the device's ACK; a NAK, an unexpected byte
/// or a closed channel raises ProtocolError naming the failed step, and a
/// broken channel raises TransportError.
class Client {
 public:
  Client(std::unique_ptr<ByteTransport> transport, CappConfig geometry);

  const CappConfig& geometry() const noexcept { return geometry_; }
  ByteTransport& transport() noexcept { return *transport_; }
  void close() { transport_->close(); }

  // Single commands.
  void clear_tags() { transact(Opcode::kClearTags, {}, "clear_tags"); }
  void load_comparand(const Word& w);
  void load_mask(const Mask& m);
  void search_pulse() { transact(Opcode::kSearch, {}, "search_pulse"); }
  void write() { transact(Opcode::kWrite, {}, "write"); }
  void select_first() { transact(Opcode::kSelectFirst, {}, "select_first"); }
  /// STATUS: true iff some cell is tagged.
  bool some_none();
  /// READ: OR of every responder.
  Word read_word();

  /// SET_TAGS; the SET line pulse leaves every tag high.
  void reset_tags() { transact(Opcode::kSetTags, {}, "reset_tags"); }

  /// Full search recipe: reset tags, comparand, mask, search pulse.
  void search(const SearchQuery& q);

  /// Search pulse without the tag reset: intersects with current responders.
  void refine(const SearchQuery& q);

  /// Writes `value` into the positions of every responder where `field_mask` is 0.
  void multiwrite(const Word& value, const Mask& field_mask);

  /// reset_tags + multiwrite(pattern, compare-all): every cell becomes `pattern`.
  void fill(const Word& pattern);

  /// Places each word in the lowest-indexed cell currently equal to
  /// `empty_pattern` (search, select first, multi-write). Stops when no free
  /// cell remains and returns how many words were placed. Memory must already
  /// hold `empty_pattern` in every free cell; see fill(). A word equal to
  /// `empty_pattern` is rejected with std::invalid_argument before any traffic.
  std::size_t load_words(std::span<const Word> words, const Word& empty_pattern);

  /// Lists the words of every cell matching `q`, lowest cell index first.
  ///
  /// Bit `fresh_bit` is a reserved marker: it must be 1 in every cell that
  /// matches `q`, and `q` must ignore it. Each round narrows the responders to
  /// matching cells whose marker is still 1, selects the first, reads it and
  /// clears its marker. Afterwards the markers of all visited cells are set
  /// back to 1, so memory ends bit-identical to how it started. Tags and the
  /// search registers are left modified.
  std::vector<Word> enumerate_matches(const SearchQuery& q, std::size_t fresh_bit);

  /// Device cycles the commands issued so far take, from the protocol cost model.
  std::uint64_t expected_cycles() const noexcept { return expected_cycles_; }

  /// Result of the most recent STATUS, if any.
  std::optional<bool> last_status() const noexcept { return last_status_; }

 private:
  std::vector<std::uint8_t> transact(Opcode op, std::span<const std::uint8_t> payload,
                                     std::string_view phase);
  void require_width(const BitVector& v, const char* what) const;

  std::unique_ptr<ByteTransport> transport_;
  CappConfig geometry_;
  std::uint64_t expected_cycles_ = 0;
  std::optional<bool> last_status_;
};

}  // namespace capp

#endif  // CAPP_CLIENT_HPP
