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

#include <random>
#include <stdexcept>

#include "capp/capp.hpp"
#include "capp/oracle/reference.hpp"
#include "capp/oracle/replay.hpp"
#include "doctest.h"
#include "support/random_ops.hpp"

namespace oracle = capp::oracle;

TEST_CASE("search example by hand") {
  oracle::OracleState s(8, 3);
  s.cells = {0x5A, 0x5B, 0xA5};
  s.apply(oracle::SetTags{});
  s.apply(oracle::LoadComparand{0x5A});
  s.apply(oracle::LoadMask{0x01});
  s.apply(oracle::SearchPulse{});
  CHECK(s.tags == std::vector<bool>{true, true, false});
}

TEST_CASE("read with no tags and fully masked write") {
  oracle::OracleState s(8, 3);
  s.cells = {0x12, 0x34, 0x56};
  CHECK(s.apply(oracle::Read{}) == 0u);
  s.apply(oracle::SetTags{});
  s.apply(oracle::LoadComparand{0xFF});
  s.apply(oracle::LoadMask{0xFF});
  s.apply(oracle::Write{});
  CHECK(s.cells == std::vector<std::uint64_t>{0x12, 0x34, 0x56});
}

TEST_CASE("malformed ops are rejected") {
  oracle::OracleState s(8, 2);
  CHECK_THROWS_AS(s.apply(oracle::LoadComparand{0x100}), std::invalid_argument);
  CHECK_THROWS_AS(s.apply(oracle::LoadMask{0x1FF}), std::invalid_argument);
  CHECK_THROWS_AS(oracle::OracleState(0, 2), std::invalid_argument);
  CHECK_THROWS_AS(oracle::OracleState(65, 2), std::invalid_argument);
  CHECK_THROWS_AS(oracle::OracleState(8, 0), std::invalid_argument);
}

TEST_CASE("equivalent: fresh, identical and divergent histories") {
  const capp::CappConfig config{16, 7};
  oracle::OracleState ref(16, 7);
  capp::Capp c(config);
  CHECK(oracle::equivalent(ref, c));

  std::mt19937_64 rng(99);
  for (int k = 0; k < 200; ++k) {
    const auto op = capp::testing::random_op(rng, ref);
    CHECK(ref.apply(op) == capp::testing::apply(c, op));
  }
  CHECK(oracle::equivalent(ref, c));

  // Diverge: write a value into every cell on one side only.
  c.set_all_tags();
  c.load_mask(capp::Mask::compare_all(16));
  c.load_comparand(capp::Word::from_u64(16, 0xBEEF));
  c.write_parallel();
  ref.apply(oracle::SetTags{});
  ref.apply(oracle::LoadMask{0});
  ref.apply(oracle::LoadComparand{0xBEEF});
  CHECK_FALSE(oracle::equivalent(ref, c));
}

TEST_CASE("equivalent rejects geometry mismatch") {
  oracle::OracleState ref(8, 4);
  capp::Capp c(capp::CappConfig{16, 4});
  CHECK_THROWS_AS(oracle::equivalent(ref, c), std::invalid_argument);
}

TEST_CASE("reference host: load_words fills free cells in order and stops when full") {
  oracle::ReferenceHost host(8, 4);
  const std::vector<std::uint64_t> three{0x11, 0x22, 0x33};
  CHECK(host.load_words(three, 0) == 3);
  CHECK(host.state().cells == std::vector<std::uint64_t>{0x11, 0x22, 0x33, 0x00});

  oracle::ReferenceHost full(8, 4);
  const std::vector<std::uint64_t> five{1, 2, 3, 4, 5};
  CHECK(full.load_words(five, 0) == 4);
}

TEST_CASE("describe names every op") {
  CHECK(oracle::describe(oracle::LoadMask{0x1F}) == "load_mask 0x1f");
  CHECK(oracle::describe(oracle::SearchPulse{}) == "search");
}
