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

#include "capp/capp.hpp"

#include <string>

#include "capp/error.hpp"

namespace capp {

Capp::Capp(CappConfig config) : config_(config) {
  config_.validate();
  cells_.assign(config_.num_cells, Word(config_.word_bits));
  tags_ = TagVector(config_.num_cells);
  comparand_ = Word(config_.word_bits);
  mask_ = Mask(config_.word_bits);
}

void Capp::set_all_tags() { tags_.fill(true); }

void Capp::clear_all_tags() { tags_.fill(false); }

void Capp::load_comparand(const Word& w) {
  require_word_width(w, "comparand");
  comparand_ = w;
}

void Capp::load_mask(const Mask& m) {
  require_word_width(m, "mask");
  mask_ = m;
}

void Capp::search_pulse() {
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    if (tags_.test(i) && !equal_under_mask(cells_[i], comparand_, mask_)) tags_.reset(i);
  }
}

void Capp::select_first() { tags_.keep_first(); }

Word Capp::read_or() const {
  Word out(config_.word_bits);
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    if (tags_.test(i)) out |= cells_[i];
  }
  return out;
}

void Capp::write_parallel() {
  const auto value = comparand_.limbs();
  const auto ignore = mask_.limbs();
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    if (!tags_.test(i)) continue;
    auto cell = cells_[i].limbs();
    for (std::size_t k = 0; k < cell.size(); ++k) {
      cell[k] = (cell[k] & ignore[k]) | (value[k] & ~ignore[k]);
    }
  }
}

void Capp::load_image(std::span<const Word> words) {
  if (words.size() > cells_.size()) {
    throw ImageError("image has " + std::to_string(words.size()) + " words but only " +
                         std::to_string(cells_.size()) + " cells",
                     0);
  }
  for (const auto& w : words) require_word_width(w, "image word");
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    cells_[i] = i < words.size() ? words[i] : Word(config_.word_bits);
  }
}

void Capp::require_word_width(const BitVector& v, const char* what) const {
  if (v.width() != config_.word_bits) {
    throw WidthError(std::string(what) + " is " + std::to_string(v.width()) +
                     " bits wide, expected " + std::to_string(config_.word_bits));
  }
}

}  // namespace capp
