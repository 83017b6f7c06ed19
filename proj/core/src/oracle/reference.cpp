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

#include "capp/oracle/reference.hpp"

#include <stdexcept>

#include "capp/capp.hpp"

namespace capp::oracle {
namespace {

bool bit_of(std::uint64_t value, unsigned j) { return ((value >> j) & 1U) != 0; }

std::uint64_t with_bit(std::uint64_t value, unsigned j, bool on) {
  const std::uint64_t one = std::uint64_t{1} << j;
  return on ? (value | one) : (value & ~one);
}

void require_fits(std::uint64_t value, unsigned width, const char* what) {
  for (unsigned j = width; j < 64; ++j) {
    if (bit_of(value, j)) throw std::invalid_argument(std::string(what) + " exceeds oracle width");
  }
}

template <class... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

std::string hex(std::uint64_t v) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string s;
  do {
    s.insert(s.begin(), kDigits[v % 16]);
    v /= 16;
  } while (v != 0);
  return "0x" + s;
}

}  // namespace

std::string describe(const Op& op) {
  return std::visit(Overloaded{
                        [](const SetTags&) -> std::string { return "set_tags"; },
                        [](const ClearTags&) -> std::string { return "clear_tags"; },
                        [](const LoadComparand& o) { return "load_comparand " + hex(o.value); },
                        [](const LoadMask& o) { return "load_mask " + hex(o.value); },
                        [](const SearchPulse&) -> std::string { return "search"; },
                        [](const SelectFirst&) -> std::string { return "select_first"; },
                        [](const Read&) -> std::string { return "read"; },
                        [](const Write&) -> std::string { return "write"; },
                        [](const AnyTag&) -> std::string { return "any_tag"; },
                    },
                    op);
}

OracleState::OracleState(unsigned w, std::size_t num_cells)
    : width(w), cells(num_cells, 0), tags(num_cells, false) {
  if (w == 0 || w > 64) throw std::invalid_argument("oracle width must be 1..64");
  if (num_cells == 0) throw std::invalid_argument("oracle needs at least one cell");
}

bool OracleState::matches(std::size_t i) const {
  for (unsigned j = 0; j < width; ++j) {
    if (bit_of(mask, j)) continue;
    if (bit_of(cells[i], j) != bit_of(comparand, j)) return false;
  }
  return true;
}

std::optional<std::uint64_t> OracleState::apply(const Op& op) {
  return std::visit(
      Overloaded{
          [&](const SetTags&) -> std::optional<std::uint64_t> {
            for (std::size_t i = 0; i < tags.size(); ++i) tags[i] = true;
            return std::nullopt;
          },
          [&](const ClearTags&) -> std::optional<std::uint64_t> {
            for (std::size_t i = 0; i < tags.size(); ++i) tags[i] = false;
            return std::nullopt;
          },
          [&](const LoadComparand& o) -> std::optional<std::uint64_t> {
            require_fits(o.value, width, "comparand");
            comparand = o.value;
            return std::nullopt;
          },
          [&](const LoadMask& o) -> std::optional<std::uint64_t> {
            require_fits(o.value, width, "mask");
            mask = o.value;
            return std::nullopt;
          },
          [&](const SearchPulse&) -> std::optional<std::uint64_t> {
            for (std::size_t i = 0; i < cells.size(); ++i) {
              if (tags[i] && !matches(i)) tags[i] = false;
            }
            return std::nullopt;
          },
          [&](const SelectFirst&) -> std::optional<std::uint64_t> {
            bool seen = false;
            for (std::size_t i = 0; i < tags.size(); ++i) {
              if (tags[i] && !seen) {
                seen = true;
              } else {
                tags[i] = false;
              }
            }
            return std::nullopt;
          },
          [&](const Read&) -> std::optional<std::uint64_t> {
            std::uint64_t out = 0;
            for (std::size_t i = 0; i < cells.size(); ++i) {
              if (!tags[i]) continue;
              for (unsigned j = 0; j < width; ++j) {
                if (bit_of(cells[i], j)) out = with_bit(out, j, true);
              }
            }
            return out;
          },
          [&](const Write&) -> std::optional<std::uint64_t> {
            for (std::size_t i = 0; i < cells.size(); ++i) {
              if (!tags[i]) continue;
              for (unsigned j = 0; j < width; ++j) {
                if (!bit_of(mask, j)) cells[i] = with_bit(cells[i], j, bit_of(comparand, j));
              }
            }
            return std::nullopt;
          },
          [&](const AnyTag&) -> std::optional<std::uint64_t> {
            for (std::size_t i = 0; i < tags.size(); ++i) {
              if (tags[i]) return 1;
            }
            return 0;
          },
      },
      op);
}

bool equivalent(const OracleState& oracle, const Capp& capp) {
  const auto& config = capp.config();
  if (config.word_bits != oracle.width || config.num_cells != oracle.cells.size()) {
    throw std::invalid_argument("oracle and CAPP geometries differ");
  }
  for (unsigned j = 0; j < oracle.width; ++j) {
    if (capp.comparand().test(j) != bit_of(oracle.comparand, j)) return false;
    if (capp.mask().test(j) != bit_of(oracle.mask, j)) return false;
  }
  for (std::size_t i = 0; i < oracle.cells.size(); ++i) {
    if (capp.read_tags().test(i) != oracle.tags[i]) return false;
    const auto& cell = capp.cell(i);
    for (unsigned j = 0; j < oracle.width; ++j) {
      if (cell.test(j) != bit_of(oracle.cells[i], j)) return false;
    }
  }
  return true;
}

}  // namespace capp::oracle
