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

#include "server.hpp"

#include <chrono>
#include <fstream>
#include <memory>
#include <ostream>

#include "capp/device.hpp"
#include "capp/memory_image.hpp"
#include "capp/serve.hpp"
#include "session.hpp"

namespace capp::cli {
namespace {

ServerOptions validated(ServerOptions options) {
  try {
    options.config.validate();
  } catch (const ConfigError& e) {
    throw UsageError(e.what());
  }
  return options;
}

std::vector<Word> load(const ServerOptions& options) {
  if (!options.image) return {};
  try {
    return read_image_file(*options.image, options.config);
  } catch (const ImageError& e) {
    throw UsageError(options.image->string() + ": " + e.what());
  }
}

}  // namespace

Server::Server(ServerOptions options)
    : options_(validated(std::move(options))),
      image_(load(options_)),
      listener_(options_.listen) {}

void Server::run(std::stop_token stop, std::ostream& log) {
  std::unique_ptr<std::ofstream> trace_file;
  std::unique_ptr<TraceWriter> trace;
  if (options_.trace) {
    trace_file = std::make_unique<std::ofstream>(*options_.trace);
    if (!*trace_file) throw UsageError("cannot open trace file '" + options_.trace->string() + "'");
    trace = std::make_unique<TraceWriter>(*trace_file);
  }

  log << "listening on " << options_.listen.host << ":" << port() << " ("
      << options_.config.word_bits << "-bit words, " << options_.config.num_cells << " cells)"
      << std::endl;

  while (!stop.stop_requested()) {
    auto stream = listener_.accept(std::chrono::milliseconds(100));
    if (!stream) continue;

    Capp capp(options_.config);
    capp.load_image(image_);
    Device device(std::move(capp));
    log << "connection opened" << std::endl;
    try {
      serve(device, *stream, trace.get());
    } catch (const TransportError& e) {
      log << "connection error: " << e.what() << std::endl;
    }
    stream->close();
    log << "connection closed after " << device.cycles() << " cycles" << std::endl;
    if (options_.once) break;
  }
}

}  // namespace capp::cli
