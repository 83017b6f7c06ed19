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

#ifndef CAPP_ERROR_HPP
#define CAPP_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace capp {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid geometry (word width or cell count).
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// A bit vector or hex literal does not match the expected width.
class WidthError : public Error {
 public:
  using Error::Error;
};

/// Malformed memory image; carries the 1-based line number (0 if not line-specific).
class ImageError : public Error {
 public:
  ImageError(const std::string& what, std::size_t line)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// The byte channel failed or was closed underneath an operation.
class TransportError : public Error {
 public:
  using Error::Error;
};

/// The device answered with NAK, an unexpected byte, or too few bytes.
/// `phase()` names the step of the host-side operation that failed.
class ProtocolError : public Error {
 public:
  ProtocolError(std::string phase, const std::string& detail)
      : Error(phase + ": " + detail), phase_(std::move(phase)) {}

  const std::string& phase() const noexcept { return phase_; }

 private:
  std::string phase_;
};

}  // namespace capp

#endif  // CAPP_ERROR_HPP
