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

#ifndef CAPP_CONFIG_HPP
#define CAPP_CONFIG_HPP

#include <cstddef>

namespace capp {

/// Geometry of a CAPP: bits per cell word and number of cells.
struct CappConfig {
  /// Four-byte words, as on the reference FPGA build.
  static constexpr std::size_t kDefaultWordBits = 32;
  static constexpr std::size_t kDefaultNumCells = 32;

  std::size_t word_bits = kDefaultWordBits;
  std::size_t num_cells = kDefaultNumCells;

  std::size_t word_bytes() const noexcept { return word_bits / 8; }

  /// Throws ConfigError unless word_bits is a positive multiple of 8 and num_cells >= 1.
  void validate() const;

  friend bool operator==(const CappConfig&, const CappConfig&) = default;
};

}  // namespace capp

#endif  // CAPP_CONFIG_HPP
