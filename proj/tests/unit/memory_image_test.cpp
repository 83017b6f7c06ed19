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

#include <filesystem>
#include <sstream>

#include "capp/capp.hpp"
#include "capp/error.hpp"
#include "capp/memory_image.hpp"
#include "doctest.h"

using capp::CappConfig;

TEST_CASE("image lines map to cells, comments and blanks skipped") {
  std::istringstream in(
      "# header comment\n"
      "0x5A\n"
      "\n"
      "5b   # trailing comment\n"
      "  0XA5  \n");
  const auto words = capp::parse_image(in, CappConfig{8, 4});
  REQUIRE(words.size() == 3);
  CHECK(words[0].to_u64() == 0x5A);
  CHECK(words[1].to_u64() == 0x5B);
  CHECK(words[2].to_u64() == 0xA5);

  capp::Capp c(CappConfig{8, 4});
  c.load_image(words);
  CHECK(c.cell(2).to_u64() == 0xA5);
  CHECK(c.cell(3).none());
}

TEST_CASE("too many lines is an error naming the line") {
  std::istringstream in("1\n2\n\n3\n");
  try {
    capp::parse_image(in, CappConfig{8, 2});
    FAIL("expected ImageError");
  } catch (const capp::ImageError& e) {
    CHECK(e.line() == 4);
  }
}

TEST_CASE("bad words are errors naming the line") {
  std::istringstream wide("0x1\n0x100\n");
  CHECK_THROWS_AS(capp::parse_image(wide, CappConfig{8, 4}), capp::ImageError);
  std::istringstream junk("0x1\nhello\n");
  try {
    capp::parse_image(junk, CappConfig{8, 4});
    FAIL("expected ImageError");
  } catch (const capp::ImageError& e) {
    CHECK(e.line() == 2);
  }
}

TEST_CASE("dump then parse reproduces the cells") {
  capp::Capp c(CappConfig{32, 5});
  std::vector<capp::Word> words;
  for (std::uint64_t v : {0xDEADBEEFULL, 0x1ULL, 0x0ULL, 0x80000000ULL}) {
    words.push_back(capp::Word::from_u64(32, v));
  }
  c.load_image(words);

  const auto path = std::filesystem::temp_directory_path() / "capp_image_test.hex";
  capp::write_image_file(path, c.cells());
  const auto back = capp::read_image_file(path, CappConfig{32, 5});
  std::filesystem::remove(path);
  REQUIRE(back.size() == 5);
  CHECK(back[0].to_hex() == "0xdeadbeef");
  for (std::size_t i = 0; i < 5; ++i) CHECK(back[i] == c.cell(i));
}

TEST_CASE("missing file") {
  CHECK_THROWS_AS(capp::read_image_file("/nonexistent/capp.hex", CappConfig{8, 4}),
                  capp::ImageError);
}
