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

#ifndef CAPP_CLI_DEMOS_HPP
#define CAPP_CLI_DEMOS_HPP

#include <iosfwd>
#include <span>
#include <string_view>

#include "session.hpp"

namespace capp::cli {

std::span<const std::string_view> demo_names();

/// Runs a self-checking demo against a fresh device. Every result is
/// compared with the reference model; returns kExitOk when all agree and
/// kExitExpectation otherwise. Unknown names and geometries the demo cannot
/// use throw UsageError.
int run_demo(std::string_view name, Session& session, std::ostream& out);

}  // namespace capp::cli

#endif  // CAPP_CLI_DEMOS_HPP
