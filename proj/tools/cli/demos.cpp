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

#include "demos.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "capp/oracle/replay.hpp"
#include "script.hpp"

namespace capp::cli {
namespace {

constexpr std::array<std::string_view, 3> kDemos{"lookup", "ternary", "enumerate"};

std::uint64_t ones(unsigned bits) {
  return bits >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
}

std::string hex(std::uint64_t value, unsigned width) {
  return Word::from_u64(width, value).to_hex();
}

// Deterministic, well-spread payloads (Fibonacci hashing).
std::uint64_t spread(std::size_t i, unsigned bits) {
  const std::uint64_t x = (static_cast<std::uint64_t>(i) + 1) * 0x9E3779B97F4A7C15ULL;
  return bits == 0 ? 0 : x >> (64 - bits);
}

class Checker {
 public:
  explicit Checker(std::ostream& out) : out_(out) {}

  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok) {
      ++failures_;
      out_ << "  MISMATCH: " << what << '\n';
    }
  }

  int finish() {
    if (failures_ == 0) {
      out_ << "self-check: " << checks_ << " checks agree with the reference model\n";
      return kExitOk;
    }
    out_ << "self-check: " << failures_ << " of " << checks_ << " checks FAILED\n";
    return kExitExpectation;
  }

 private:
  std::ostream& out_;
  std::size_t checks_ = 0;
  std::size_t failures_ = 0;
};

// Exact-match table: each cell holds key (high half) and value (low half).
// A lookup searches on the key field with the value field masked off and
// reads the value back from the single responder.
int demo_lookup(Session& session, std::ostream& out) {
  const auto width = static_cast<unsigned>(session.config().word_bits);
  const std::size_t cells = session.config().num_cells;
  const unsigned key_bits = width / 2;
  const unsigned value_bits = width - key_bits;
  const std::uint64_t key_mask = ones(key_bits);
  const std::uint64_t value_mask = ones(value_bits);

  Client& client = session.client();
  oracle::ReferenceHost ref(width, cells);
  Checker check(out);

  out << "lookup: " << width << "-bit cells = " << key_bits << "-bit key | " << value_bits
      << "-bit value, " << cells << " cells\n";

  const std::size_t n = std::min<std::size_t>(cells, 6);
  std::vector<std::uint64_t> keys;
  std::vector<std::uint64_t> raw;
  std::vector<Word> words;
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t key = ((i + 1) * 0x2D + 0x10) & key_mask;
    const std::uint64_t value = ((i * 0x3B + 0x7) & value_mask) | 1;
    keys.push_back(key);
    raw.push_back((key << value_bits) | value);
    words.push_back(Word::from_u64(width, raw.back()));
    out << "  insert key " << hex(key, key_bits) << " value " << hex(value, value_bits) << '\n';
  }

  const std::size_t placed = client.load_words(words, Word(width));
  const std::size_t ref_placed = ref.load_words(raw, 0);
  out << "  placed " << placed << " of " << n << " entries\n";
  check.expect(placed == ref_placed, "placed count");
  check.expect(placed == n, "every entry placed");

  // Key 0 would hit the empty cells, so probe with the smallest unused nonzero key.
  std::uint64_t absent = 1;
  while (std::find(keys.begin(), keys.end(), absent) != keys.end()) ++absent;
  std::vector<std::uint64_t> queries = keys;
  queries.push_back(absent & key_mask);

  const Mask value_field = Mask::from_u64(width, value_mask);
  for (std::size_t q = 0; q < queries.size(); ++q) {
    const std::uint64_t key = queries[q];
    client.search({Word::from_u64(width, key << value_bits), value_field});
    ref.search(key << value_bits, value_mask);
    const bool hit = client.some_none();
    check.expect(hit == ref.some(), "hit/miss for key " + hex(key, key_bits));
    if (!hit) {
      out << "  lookup " << hex(key, key_bits) << " -> miss\n";
      check.expect(q == keys.size(), "key " + hex(key, key_bits) + " should be present");
      continue;
    }
    const std::uint64_t value = client.read_word().to_u64() & value_mask;
    out << "  lookup " << hex(key, key_bits) << " -> " << hex(value, value_bits) << '\n';
    check.expect(value == (ref.read() & value_mask), "value for key " + hex(key, key_bits));
    check.expect(q < keys.size() && value == (raw[q] & value_mask),
                 "stored value for key " + hex(key, key_bits));
  }
  return check.finish();
}

// Masked classification: every class is one ternary query (care bits plus a
// valid marker in the top bit so empty cells never respond).
int demo_ternary(Session& session, std::ostream& out) {
  const auto width = static_cast<unsigned>(session.config().word_bits);
  const std::size_t cells = session.config().num_cells;
  const std::uint64_t all = ones(width);
  const std::uint64_t valid = std::uint64_t{1} << (width - 1);

  Client& client = session.client();
  oracle::ReferenceHost ref(width, cells);
  Checker check(out);

  out << "ternary: classify stored words with masked searches (" << width << "x" << cells
      << ")\n";

  const std::size_t n = std::min<std::size_t>(cells, 8);
  std::vector<std::uint64_t> raw;
  std::vector<Word> words;
  for (std::size_t i = 0; i < n; ++i) {
    raw.push_back(valid | spread(i, width - 1));
    words.push_back(Word::from_u64(width, raw.back()));
    out << "  cell " << i << " = " << hex(raw.back(), width) << '\n';
  }
  const std::size_t placed = client.load_words(words, Word(width));
  check.expect(placed == ref.load_words(raw, 0), "placed count");

  struct Rule {
    const char* name;
    std::uint64_t care;   // positions compared
    std::uint64_t value;  // required bits at those positions
  };
  const std::uint64_t high_payload = std::uint64_t{1} << (width - 2);
  const Rule rules[] = {
      {"odd", valid | 0x1, valid | 0x1},
      {"even", valid | 0x1, valid},
      {"high payload bit", valid | high_payload, valid | high_payload},
      {"low bits = 11", valid | 0x3, valid | 0x3},
      {"low nibble = 0xa", valid | 0xF, valid | 0xA},
  };

  for (const auto& rule : rules) {
    const std::uint64_t ignore = all & ~rule.care;
    client.search({Word::from_u64(width, rule.value), Mask::from_u64(width, ignore)});
    ref.search(rule.value, ignore);
    const bool some = client.some_none();
    check.expect(some == ref.some(), std::string("some/none for ") + rule.name);

    std::size_t members = 0;
    for (const auto v : raw) members += ((v & rule.care) == rule.value) ? 1 : 0;
    check.expect(some == (members > 0), std::string("membership for ") + rule.name);

    if (!some) {
      out << "  class " << rule.name << ": none\n";
      continue;
    }
    const std::uint64_t combined = client.read_word().to_u64();
    check.expect(combined == ref.read(), std::string("combined read for ") + rule.name);
    client.select_first();
    ref.select_first();
    const std::uint64_t first = client.read_word().to_u64();
    check.expect(first == ref.read(), std::string("first member for ") + rule.name);
    out << "  class " << rule.name << ": " << members << " member(s), first "
        << hex(first, width) << ", OR " << hex(combined, width) << '\n';
  }
  return check.finish();
}

// Walks every responder of a query in cell order using a reserved marker
// bit, then verifies the markers were put back.
int demo_enumerate(Session& session, std::ostream& out) {
  const auto width = static_cast<unsigned>(session.config().word_bits);
  const std::size_t cells = session.config().num_cells;
  const std::uint64_t all = ones(width);
  const unsigned fresh_bit = width - 1;
  const std::uint64_t marker = std::uint64_t{1} << fresh_bit;

  Client& client = session.client();
  oracle::ReferenceHost ref(width, cells);
  Checker check(out);

  out << "enumerate: list every cell whose low two bits are 01 (marker bit " << fresh_bit
      << ")\n";

  const std::size_t n = std::min<std::size_t>(cells, 10);
  std::vector<std::uint64_t> raw;
  std::vector<Word> words;
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t payload = spread(i, width - 1);
    if (i % 3 == 0) payload = (payload & ~std::uint64_t{0x3}) | 0x1;
    raw.push_back(marker | payload);
    words.push_back(Word::from_u64(width, raw.back()));
  }
  const std::size_t placed = client.load_words(words, Word(width));
  check.expect(placed == ref.load_words(raw, 0), "placed count");
  out << "  stored " << placed << " words\n";

  const std::uint64_t query_value = 0x1;
  const std::uint64_t query_ignore = all & ~std::uint64_t{0x3};
  const auto found = client.enumerate_matches(
      {Word::from_u64(width, query_value), Mask::from_u64(width, query_ignore)}, fresh_bit);
  const auto ref_found = ref.enumerate_matches(query_value, query_ignore, fresh_bit);

  std::vector<std::uint64_t> direct;
  for (std::size_t i = 0; i < placed; ++i) {
    if ((raw[i] & 0x3) == query_value) direct.push_back(raw[i]);
  }

  for (std::size_t k = 0; k < found.size(); ++k) {
    out << "  match " << k << ": " << found[k].to_hex() << '\n';
  }
  check.expect(found.size() == direct.size(), "number of matches");
  for (std::size_t k = 0; k < std::min(found.size(), direct.size()); ++k) {
    check.expect(found[k].to_u64() == direct[k], "match " + std::to_string(k));
    check.expect(k < ref_found.size() && found[k].to_u64() == ref_found[k],
                 "reference match " + std::to_string(k));
  }

  // Any matching cell whose marker is still clear would respond here.
  client.search({Word::from_u64(width, query_value), Mask::from_u64(width, query_ignore & ~marker)});
  const bool leftover = client.some_none();
  out << "  markers restored: " << (leftover ? "no" : "yes") << '\n';
  check.expect(!leftover, "markers restored");
  return check.finish();
}

}  // namespace

std::span<const std::string_view> demo_names() { return kDemos; }

int run_demo(std::string_view name, Session& session, std::ostream& out) {
  const auto width = session.config().word_bits;
  if (name == "lookup" || name == "ternary" || name == "enumerate") {
    if (width > 64) throw UsageError("demos support word widths up to 64 bits");
  }
  if (name == "lookup") return demo_lookup(session, out);
  if (name == "ternary") return demo_ternary(session, out);
  if (name == "enumerate") return demo_enumerate(session, out);

  std::string list;
  for (const auto d : kDemos) list += (list.empty() ? "" : ", ") + std::string(d);
  throw UsageError("unknown demo '" + std::string(name) + "' (available: " + list + ")");
}

}  // namespace capp::cli
