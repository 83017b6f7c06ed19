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

// capp: serve, drive and script an emulated content addressable parallel
// processor.
//
//   capp serve --width 32 --cells 32 --listen 127.0.0.1:7312
//   capp repl --connect 127.0.0.1:7312
//   capp run tools/scripts/tutorial.capp --embedded
//   capp demo lookup

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <stop_token>
#include <string>

#include "CLI11.hpp"
#include "cli/demos.hpp"
#include "cli/script.hpp"
#include "cli/server.hpp"
#include "cli/session.hpp"

namespace {

using capp::cli::kExitUsage;

struct Flags {
  capp::CappConfig config;
  std::string listen = "127.0.0.1:7312";
  std::string connect;
  std::string image;
  std::string trace;
  bool embedded = false;
  bool cycles = false;
  bool once = false;
  std::string script;
  std::string demo;
};

void add_geometry(CLI::App* sub, Flags& f) {
  sub->add_option("--cells", f.config.num_cells, "Number of cells")->capture_default_str();
  sub->add_option("--width", f.config.word_bits, "Bits per word (multiple of 8)")
      ->capture_default_str();
}

void add_session(CLI::App* sub, Flags& f) {
  add_geometry(sub, f);
  auto* connect = sub->add_option("--connect", f.connect, "Device served at ADDR:PORT");
  auto* embedded = sub->add_flag("--embedded", f.embedded, "Run an in-process device (default)");
  connect->excludes(embedded);
  sub->add_option("--image", f.image, "Memory image for the embedded device");
  sub->add_flag("--cycles", f.cycles, "Report device cycles after each command");
  sub->add_option("--trace", f.trace, "Write a byte trace to PATH");
}

capp::cli::SessionOptions session_options(const Flags& f) {
  capp::cli::SessionOptions o;
  o.config = f.config;
  if (!f.connect.empty()) o.connect = capp::Endpoint::parse(f.connect);
  if (!f.image.empty()) o.image = f.image;
  if (!f.trace.empty()) o.trace = f.trace;
  return o;
}

int cmd_serve(const Flags& f) {
  capp::cli::ServerOptions o;
  o.config = f.config;
  o.listen = capp::Endpoint::parse(f.listen);
  if (!f.image.empty()) o.image = f.image;
  if (!f.trace.empty()) o.trace = f.trace;
  o.once = f.once;
  capp::cli::Server server(o);
  std::stop_source never;
  server.run(never.get_token(), std::cerr);
  return 0;
}

int cmd_repl(const Flags& f) {
  capp::cli::Session session(session_options(f));
  capp::cli::ScriptRunner runner(session, std::cout, {f.cycles, {}});
  runner.repl(std::cin, std::cerr, ::isatty(STDIN_FILENO) != 0);
  return 0;
}

int cmd_run(const Flags& f) {
  const std::filesystem::path path(f.script);
  std::ifstream in(path);
  if (!in) throw capp::cli::UsageError("cannot read script '" + f.script + "'");
  capp::cli::Session session(session_options(f));
  capp::cli::ScriptRunner runner(session, std::cout, {f.cycles, path.parent_path()});
  return runner.run(in, std::cerr);
}

int cmd_demo(const Flags& f) {
  capp::cli::Session session(session_options(f));
  const int rc = capp::cli::run_demo(f.demo, session, std::cout);
  if (f.cycles) {
    std::cout << "cycles: " << session.cycles() << " ("
              << capp::cycles_to_microseconds(session.cycles()) << " us at 48 MHz)\n";
  }
  return rc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Emulated content addressable parallel processor"};
  app.require_subcommand(1);
  Flags f;

  auto* serve = app.add_subcommand("serve", "Serve an emulated device over TCP");
  add_geometry(serve, f);
  serve->add_option("--listen", f.listen, "ADDR:PORT to listen on")->capture_default_str();
  serve->add_option("--image", f.image, "Memory image loaded into each fresh device");
  serve->add_option("--trace", f.trace, "Write a device-side byte trace to PATH");
  serve->add_flag("--once", f.once, "Exit after the first connection closes");

  auto* repl = app.add_subcommand("repl", "Interactive session with a device");
  add_session(repl, f);

  auto* run = app.add_subcommand("run", "Execute a script; exit 1 if an expect fails");
  run->add_option("script", f.script, "Script file")->required();
  add_session(run, f);

  auto* demo = app.add_subcommand("demo", "Run a self-checking demo (lookup, ternary, enumerate)");
  demo->add_option("name", f.demo, "Demo name")->required();
  add_session(demo, f);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*serve) return cmd_serve(f);
    if (*repl) return cmd_repl(f);
    if (*run) return cmd_run(f);
    if (*demo) return cmd_demo(f);
  } catch (const std::exception& e) {
    std::cerr << "capp: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
