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

#ifndef CAPP_ORACLE_REPLAY_HPP
#define CAPP_ORACLE_REPLAY_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "capp/oracle/reference.hpp"

namespace capp::oracle {

/// The host driver's composite operations expressed as reference-model op
/// sequences. Used to compute the expected outcome of driver programs.
class ReferenceHost {
 public:
  ReferenceHost(unsigned width, std::size_t num_cells) : state_(width, num_cells) {}

  OracleState& state() noexcept { return state_; }
  const OracleState& state() const noexcept { return state_; }

  void search(std::uint64_t comparand, std::uint64_t mask);
  void refine(std::uint64_t comparand, std::uint64_t mask);
  void multiwrite(std::uint64_t value, std::uint64_t mask);
  void select_first() { state_.apply(SelectFirst{}); }
  bool some() { return *state_.apply(AnyTag{}) != 0; }
  std::uint64_t read() { return *state_.apply(Read{}); }

  std::size_t load_words(std::span<const std::uint64_t> words, std::uint64_t empty_pattern);
  std::vector<std::uint64_t> enumerate_matches(std::uint64_t comparand, std::uint64_t mask,
                                               unsigned fresh_bit);

  /// Mask value with every position of the width set (ignore all).
  std::uint64_t all_ones() const;

 private:
  OracleState state_;
};

}  // namespace capp::oracle

#endif  // CAPP_ORACLE_REPLAY_HPP
