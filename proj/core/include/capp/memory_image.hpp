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

#ifndef CAPP_MEMORY_IMAGE_HPP
#define CAPP_MEMORY_IMAGE_HPP

#include <filesystem>
#include <iosfwd>
#include <span>
#include <vector>

#include "capp/bit_vector.hpp"
#include "capp/config.hpp"

namespace capp {

// Memory image text format: one hex word per line (optional 0x prefix),
// line k holds cell k. Blank lines and '#' comments are skipped. An image
// may describe fewer words than there are cells; the rest stay zero.

/// Throws ImageError with the offending line number.
std::vector<Word> parse_image(std::istream& in, const CappConfig& config);
std::vector<Word> read_image_file(const std::filesystem::path& path, const CappConfig& config);

/// One `0x`-prefixed, zero-padded word per line.
void write_image(std::ostream& out, std::span<const Word> cells);
void write_image_file(const std::filesystem::path& path, std::span<const Word> cells);

}  // namespace capp

#endif  // CAPP_MEMORY_IMAGE_HPP
