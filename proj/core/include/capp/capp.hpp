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

#ifndef CAPP_CAPP_HPP
#define CAPP_CAPP_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "capp/bit_vector.hpp"
#include "capp/config.hpp"

namespace capp {

/// Architectural state of a content addressable parallel processor: the
/// cells, one tag per cell, and the two search registers (comparand, mask).
///
/// Operations are register-transfer level: each one models the effect of a
/// single control line pulse on the whole array at once. The mask register
/// gates both searching and writing (1 = position ignored / not written).
///
/// Single owner, not internally synchronized.
class Capp {
 public:
  /// All cells, tags and registers start at zero. Throws ConfigError.
  explicit Capp(CappConfig config = {});

  const CappConfig& config() const noexcept { return config_; }

  /// SET line: every tag goes high.
  void set_all_tags();
  void clear_all_tags();

  /// Throws WidthError if the width differs from the configured word width.
  void load_comparand(const Word& w);
  void load_mask(const Mask& m);

  /// Mismatch lines clear the tag of every cell that differs from the
  /// comparand at some unmasked position. Tags never turn on.
  void search_pulse();

  /// Keeps only the lowest-indexed responder.
  void select_first();

  /// Bitwise OR of every tagged cell; zero when there are no responders.
  Word read_or() const;

  /// Drives the comparand onto every unmasked position of every tagged cell.
  void write_parallel();

  const TagVector& read_tags() const noexcept { return tags_; }
  bool any_tag() const noexcept { return tags_.any(); }

  const Word& cell(std::size_t index) const { return cells_.at(index); }
  std::span<const Word> cells() const noexcept { return cells_; }
  const Word& comparand() const noexcept { return comparand_; }
  const Mask& mask() const noexcept { return mask_; }

  /// Stores `words` into cells 0..size-1 directly (memory image preload).
  /// Remaining cells are zeroed. Not a CAPP operation: there is no address bus.
  void load_image(std::span<const Word> words);

  friend bool operator==(const Capp&, const Capp&) = default;

 private:
  void require_word_width(const BitVector& v, const char* what) const;

  CappConfig config_;
  std::vector<Word> cells_;
  TagVector tags_;
  Word comparand_;
  Mask mask_;
};

}  // namespace capp

#endif  // CAPP_CAPP_HPP
