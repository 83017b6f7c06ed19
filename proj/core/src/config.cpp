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

#include "capp/config.hpp"

#include <string>

#include "capp/error.hpp"

namespace capp {

void CappConfig::validate() const {
  if (word_bits == 0 || word_bits % 8 != 0) {
    throw ConfigError("word width must be a positive multiple of 8 bits, got " +
                      std::to_string(word_bits));
  }
  if (num_cells == 0) throw ConfigError("cell count must be at least 1");
}

}  // namespace capp
