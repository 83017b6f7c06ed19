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

#include "capp/oracle/replay.hpp"

namespace capp::oracle {

std::uint64_t ReferenceHost::all_ones() const {
  std::uint64_t m = 0;
  for (unsigned j = 0; j < state_.width; ++j) m |= std::uint64_t{1} << j;
  return m;
}

void ReferenceHost::search(std::uint64_t comparand, std::uint64_t mask) {
  state_.apply(SetTags{});
  refine(comparand, mask);
}

void ReferenceHost::refine(std::uint64_t comparand, std::uint64_t mask) {
  state_.apply(LoadComparand{comparand});
  state_.apply(LoadMask{mask});
  state_.apply(SearchPulse{});
}

void ReferenceHost::multiwrite(std::uint64_t value, std::uint64_t mask) {
  state_.apply(LoadComparand{value});
  state_.apply(LoadMask{mask});
  state_.apply(Write{});
}

std::size_t ReferenceHost::load_words(std::span<const std::uint64_t> words,
                                      std::uint64_t empty_pattern) {
  std::size_t placed = 0;
  for (const auto w : words) {
    search(empty_pattern, 0);
    if (!some()) break;
    select_first();
    multiwrite(w, 0);
    ++placed;
  }
  return placed;
}

std::vector<std::uint64_t> ReferenceHost::enumerate_matches(std::uint64_t comparand,
                                                            std::uint64_t mask,
                                                            unsigned fresh_bit) {
  const std::uint64_t marker = std::uint64_t{1} << fresh_bit;
  const std::uint64_t marker_only = all_ones() & ~marker;
  std::vector<std::uint64_t> found;
  for (;;) {
    search(comparand, mask);
    refine(marker, marker_only);
    if (!some()) break;
    select_first();
    found.push_back(read());
    multiwrite(0, marker_only);
  }
  search(comparand, mask);
  refine(0, marker_only);
  multiwrite(marker, marker_only);
  return found;
}

}  // namespace capp::oracle
