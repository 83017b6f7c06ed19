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

#include "capp/memory_image.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>

#include "capp/error.hpp"

namespace capp {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

std::vector<Word> parse_image(std::istream& in, const CappConfig& config) {
  config.validate();
  std::vector<Word> words;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view text = line;
    if (const auto hash = text.find('#'); hash != std::string_view::npos) {
      text = text.substr(0, hash);
    }
    text = trim(text);
    if (text.empty()) continue;
    if (words.size() == config.num_cells) {
      throw ImageError("image has more words than the " + std::to_string(config.num_cells) +
                           " available cells",
                       lineno);
    }
    try {
      words.push_back(Word::from_hex(config.word_bits, text));
    } catch (const WidthError& e) {
      throw ImageError(e.what(), lineno);
    }
  }
  return words;
}

std::vector<Word> read_image_file(const std::filesystem::path& path, const CappConfig& config) {
  std::ifstream in(path);
  if (!in) throw ImageError("cannot open image file '" + path.string() + "'", 0);
  return parse_image(in, config);
}

void write_image(std::ostream& out, std::span<const Word> cells) {
  for (const auto& w : cells) out << w.to_hex() << '\n';
}

void write_image_file(const std::filesystem::path& path, std::span<const Word> cells) {
  std::ofstream out(path);
  if (!out) throw ImageError("cannot write image file '" + path.string() + "'", 0);
  write_image(out, cells);
  if (!out) throw ImageError("error writing image file '" + path.string() + "'", 0);
}

}  // namespace capp
