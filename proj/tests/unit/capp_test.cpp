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

#include <algorithm>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "capp/capp.hpp"
#include "capp/error.hpp"
#include "doctest.h"
#include "support/random_ops.hpp"

using capp::Capp;
using capp::CappConfig;
using capp::Mask;
using capp::Word;

namespace {

// Tags as a string, cell 0 first ("0110" means cells 1 and 2 respond).
std::string tags_of(const Capp& c) {
  std::string s;
  for (std::size_t i = 0; i < c.config().num_cells; ++i) s += c.read_tags().test(i) ? '1' : '0';
  return s;
}

void set_tags(Capp& c, const std::string& pattern) {
  // Only set_all/clear/search/select reach the tags, so build the pattern by
  // searching for a per-cell marker value.
  REQUIRE(pattern.size() == c.config().num_cells);
  const auto w = c.config().word_bits;
  std::vector<Word> saved(c.cells().begin(), c.cells().end());
  std::vector<Word> marked;
  for (std::size_t i = 0; i < pattern.size(); ++i) {
    marked.push_back(Word::from_u64(w, pattern[i] == '1' ? 1 : 0));
  }
  const Word comparand = c.comparand();
  const Mask mask = c.mask();
  c.load_image(marked);
  c.set_all_tags();
  c.load_comparand(Word::from_u64(w, 1));
  c.load_mask(Mask(w));
  c.search_pulse();
  c.load_image(saved);
  c.load_comparand(comparand);
  c.load_mask(mask);
  REQUIRE(tags_of(c) == pattern);
}

Capp with_cells(std::size_t width, std::initializer_list<std::uint64_t> values) {
  Capp c(CappConfig{width, values.size()});
  std::vector<Word> words;
  for (auto v : values) words.push_back(Word::from_u64(width, v));
  c.load_image(words);
  return c;
}

}  // namespace

TEST_CASE("new: zeroed state sized by config") {
  Capp c(CappConfig{8, 4});
  CHECK(tags_of(c) == "0000");
  for (const auto& cell : c.cells()) CHECK(cell.none());
  CHECK(c.comparand().none());
  CHECK(c.mask().none());

  Capp big(CappConfig{32, 32});
  CHECK(big.cells().size() == 32);
  CHECK(big.cell(31).width() == 32);
  CHECK(big.read_tags().width() == 32);

  Capp d;  // four-byte words by default
  CHECK(d.config().word_bits == 32);
  CHECK(d.config().num_cells == 32);
}

TEST_CASE("new: invalid configs rejected") {
  CHECK_THROWS_AS(Capp(CappConfig{7, 4}), capp::ConfigError);
  CHECK_THROWS_AS(Capp(CappConfig{0, 4}), capp::ConfigError);
  CHECK_THROWS_AS(Capp(CappConfig{8, 0}), capp::ConfigError);
  CHECK_NOTHROW(Capp(CappConfig{8, 1}));
}

TEST_CASE("set_all_tags") {
  Capp c(CappConfig{8, 4});
  c.set_all_tags();
  CHECK(tags_of(c) == "1111");
  set_tags(c, "1010");
  c.set_all_tags();
  CHECK(tags_of(c) == "1111");

  Capp one(CappConfig{8, 1});
  one.set_all_tags();
  CHECK(tags_of(one) == "1");
}

TEST_CASE("clear_all_tags") {
  Capp c(CappConfig{8, 4});
  c.set_all_tags();
  c.clear_all_tags();
  CHECK(tags_of(c) == "0000");
  c.clear_all_tags();
  CHECK(tags_of(c) == "0000");
  set_tags(c, "0101");
  c.clear_all_tags();
  CHECK(tags_of(c) == "0000");
}

TEST_CASE("load_comparand and load_mask") {
  Capp c(CappConfig{8, 2});
  c.load_comparand(Word::from_u64(8, 0x5A));
  CHECK(c.comparand().to_u64() == 0x5A);
  c.load_mask(Mask::from_u64(8, 0xFF));
  CHECK(c.mask().all());
  c.load_mask(Mask::from_u64(8, 0x00));
  CHECK(c.mask().none());
  CHECK_THROWS_AS(c.load_comparand(Word(16)), capp::WidthError);
  CHECK_THROWS_AS(c.load_mask(Mask(16)), capp::WidthError);

  Capp w32(CappConfig{32, 1});
  w32.load_comparand(Word::from_u64(32, 0));
  CHECK(w32.comparand().none());
}

TEST_CASE("search_pulse examples") {
  auto c = with_cells(8, {0x5A, 0x5B, 0xA5});
  c.set_all_tags();
  c.load_comparand(Word::from_u64(8, 0x5A));
  c.load_mask(Mask::from_u64(8, 0x01));
  c.search_pulse();
  CHECK(tags_of(c) == "110");

  set_tags(c, "101");
  c.load_mask(Mask::from_u64(8, 0xFF));
  c.search_pulse();
  CHECK(tags_of(c) == "101");

  set_tags(c, "010");
  c.load_mask(Mask::from_u64(8, 0x00));
  c.search_pulse();
  CHECK(tags_of(c) == "000");
}

TEST_CASE("select_first examples") {
  Capp c(CappConfig{8, 4});
  set_tags(c, "0110");
  c.select_first();
  CHECK(tags_of(c) == "0100");
  c.clear_all_tags();
  c.select_first();
  CHECK(tags_of(c) == "0000");
  c.set_all_tags();
  c.select_first();
  CHECK(tags_of(c) == "1000");
}

TEST_CASE("read_or examples") {
  auto c = with_cells(8, {0x05, 0x03, 0xA5});
  CHECK(c.read_or().to_u64() == 0x00);
  set_tags(c, "110");
  CHECK(c.read_or().to_u64() == 0x07);
  set_tags(c, "001");
  CHECK(c.read_or().to_u64() == 0xA5);
}

TEST_CASE("write_parallel examples") {
  Capp c(CappConfig{8, 3});
  set_tags(c, "101");
  c.load_comparand(Word::from_u64(8, 0xFF));
  c.load_mask(Mask::from_u64(8, 0x0F));
  c.write_parallel();
  CHECK(c.cell(0).to_u64() == 0xF0);
  CHECK(c.cell(1).to_u64() == 0x00);
  CHECK(c.cell(2).to_u64() == 0xF0);
  CHECK(tags_of(c) == "101");

  auto before = c;
  c.load_mask(Mask::from_u64(8, 0xFF));
  c.set_all_tags();
  c.write_parallel();
  CHECK(std::equal(c.cells().begin(), c.cells().end(), before.cells().begin()));

  c.clear_all_tags();
  c.load_mask(Mask::from_u64(8, 0x00));
  c.write_parallel();
  CHECK(std::equal(c.cells().begin(), c.cells().end(), before.cells().begin()));
}

TEST_CASE("read_tags and any_tag") {
  Capp c(CappConfig{8, 4});
  CHECK(tags_of(c) == "0000");
  CHECK_FALSE(c.any_tag());
  c.set_all_tags();
  CHECK(tags_of(c) == "1111");
  set_tags(c, "0110");
  c.select_first();
  CHECK(tags_of(c) == "0100");
  CHECK(c.any_tag());
}

TEST_CASE("load_image bounds") {
  Capp c(CappConfig{8, 2});
  std::vector<Word> three(3, Word(8));
  CHECK_THROWS_AS(c.load_image(three), capp::ImageError);
  std::vector<Word> wrong{Word(16)};
  CHECK_THROWS_AS(c.load_image(wrong), capp::WidthError);
}

// Properties, checked against per-bit brute force written here.

namespace {

bool brute_match(std::uint64_t cell, std::uint64_t comparand, std::uint64_t mask, unsigned w) {
  for (unsigned j = 0; j < w; ++j) {
    if ((mask >> j) & 1) continue;
    if (((cell >> j) & 1) != ((comparand >> j) & 1)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("search is monotone, idempotent and intersects") {
  std::mt19937_64 rng(42);
  for (int iter = 0; iter < 500; ++iter) {
    const unsigned w = 8 * (1 + rng() % 2);
    const std::size_t n = 1 + rng() % 64;
    Capp c(CappConfig{w, n});
    capp::oracle::OracleState unused(w, n);
    capp::testing::randomize_cells(rng, c, unused);

    const auto c1 = rng() & capp::testing::width_mask(w);
    const auto m1 = capp::testing::random_sparse(rng, w);
    const auto c2 = unused.cells[rng() % n];
    const auto m2 = capp::testing::random_sparse(rng, w);

    c.set_all_tags();
    c.load_comparand(Word::from_u64(w, c1));
    c.load_mask(Mask::from_u64(w, m1));
    const auto before = c.read_tags();
    c.search_pulse();
    const auto once = c.read_tags();
    CHECK((once & before) == once);  // never 0 -> 1
    c.search_pulse();
    CHECK(c.read_tags() == once);    // idempotent

    c.load_comparand(Word::from_u64(w, c2));
    c.load_mask(Mask::from_u64(w, m2));
    c.search_pulse();
    for (std::size_t i = 0; i < n; ++i) {
      const bool expected = brute_match(unused.cells[i], c1, m1, w) &&
                            brute_match(unused.cells[i], c2, m2, w);
      CHECK(c.read_tags().test(i) == expected);
    }
  }
}

TEST_CASE("full-ignore mask leaves tags unchanged") {
  std::mt19937_64 rng(5);
  for (int iter = 0; iter < 200; ++iter) {
    Capp c(CappConfig{16, 16});
    capp::oracle::OracleState unused(16, 16);
    capp::testing::randomize_cells(rng, c, unused);
    c.set_all_tags();
    c.load_comparand(Word::from_u64(16, rng() & 0xFFFF));
    c.load_mask(Mask::from_u64(16, rng() & 0xFFFF));
    c.search_pulse();
    const auto tags = c.read_tags();
    c.load_mask(Mask::ignore_all(16));
    c.load_comparand(Word::from_u64(16, rng() & 0xFFFF));
    c.search_pulse();
    CHECK(c.read_tags() == tags);
  }
}

TEST_CASE("search then read returns the unique matching word") {
  std::mt19937_64 rng(9);
  for (int iter = 0; iter < 200; ++iter) {
    Capp c(CappConfig{16, 8});
    capp::oracle::OracleState ref(16, 8);
    capp::testing::randomize_cells(rng, c, ref);
    const std::size_t pick = rng() % 8;
    const auto target = ref.cells[pick];
    if (std::count(ref.cells.begin(), ref.cells.end(), target) != 1) continue;
    c.set_all_tags();
    c.load_comparand(Word::from_u64(16, target));
    c.load_mask(Mask::compare_all(16));
    c.search_pulse();
    CHECK(c.read_or().to_u64() == target);
  }
}

TEST_CASE("write locality, exhaustive over masks and tag sets at W=8 N=8") {
  std::mt19937_64 rng(3);
  Capp base(CappConfig{8, 8});
  capp::oracle::OracleState ref(8, 8);
  capp::testing::randomize_cells(rng, base, ref);
  const std::uint64_t value = 0xC3;

  for (unsigned tagset = 0; tagset < 256; ++tagset) {
    std::string pattern;
    for (unsigned i = 0; i < 8; ++i) pattern += ((tagset >> i) & 1) ? '1' : '0';
    Capp tagged = base;
    set_tags(tagged, pattern);
    for (unsigned mask = 0; mask < 256; ++mask) {
      Capp c = tagged;
      c.load_comparand(Word::from_u64(8, value));
      c.load_mask(Mask::from_u64(8, mask));
      c.write_parallel();
      for (unsigned i = 0; i < 8; ++i) {
        const std::uint64_t old = ref.cells[i];
        const std::uint64_t expected =
            ((tagset >> i) & 1) ? ((old & mask) | (value & ~mask & 0xFF)) : old;
        if (c.cell(i).to_u64() != expected) {
          FAIL("tagset " << tagset << " mask " << mask << " cell " << i);
        }
      }
    }
  }
}

TEST_CASE("select_first leaves at most the minimum index") {
  std::mt19937_64 rng(13);
  for (int iter = 0; iter < 500; ++iter) {
    const std::size_t n = 1 + rng() % 70;
    Capp c(CappConfig{8, n});
    std::string pattern;
    std::optional<std::size_t> first;
    for (std::size_t i = 0; i < n; ++i) {
      const bool on = rng() % 5 == 0;
      pattern += on ? '1' : '0';
      if (on && !first) first = i;
    }
    set_tags(c, pattern);
    c.select_first();
    CHECK(c.read_tags().count() <= 1);
    CHECK(c.read_tags().find_first() == first);
  }
}
