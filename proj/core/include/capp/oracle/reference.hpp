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

#ifndef CAPP_ORACLE_REFERENCE_HPP
#define CAPP_ORACLE_REFERENCE_HPP

// Naive reference model of the CAPP. Every operation is a plain loop over
// cells and bit positions on unsigned integers. It deliberately shares no
// bit manipulation code with capp::Capp so the two can check each other.

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace capp {
class Capp;
}

namespace capp::oracle {

struct SetTags {};
struct ClearTags {};
struct LoadComparand {
  std::uint64_t value = 0;
};
struct LoadMask {
  std::uint64_t value = 0;
};
struct SearchPulse {};
struct SelectFirst {};
struct Read {};
struct Write {};
struct AnyTag {};

/// One CAPP operation in abstract form.
using Op = std::variant<SetTags, ClearTags, LoadComparand, LoadMask, SearchPulse, SelectFirst,
                        Read, Write, AnyTag>;

std::string describe(const Op& op);

struct OracleState {
  /// Widths 1..64; throws std::invalid_argument otherwise or when num_cells is 0.
  OracleState(unsigned width, std::size_t num_cells);

  unsigned width;
  std::vector<std::uint64_t> cells;
  std::vector<bool> tags;
  std::uint64_t comparand = 0;
  std::uint64_t mask = 0;  // bit 1 = ignore

  /// Applies `op`. Read returns the OR of responders, AnyTag returns 0 or 1,
  /// every other op returns nullopt. A register value that does not fit the
  /// width throws std::invalid_argument.
  std::optional<std::uint64_t> apply(const Op& op);

  /// Does cell `i` agree with the comparand at every position the mask keeps?
  bool matches(std::size_t i) const;
};

/// True iff cells, tags, comparand and mask agree bit for bit.
/// Throws std::invalid_argument when the geometries differ.
bool equivalent(const OracleState& oracle, const Capp& capp);

}  // namespace capp::oracle

#endif  // CAPP_ORACLE_REFERENCE_HPP
