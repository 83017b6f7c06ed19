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
#include <vector>

#include "capp/device.hpp"
#include "capp/oracle/reference.hpp"
#include "capp/protocol.hpp"
#include "doctest.h"

using capp::CappConfig;
using capp::Device;
using capp::FsmPhase;
using capp::Opcode;
using Bytes = std::vector<std::uint8_t>;

namespace {

// Steps with no input until the device accepts again; returns the step count.
std::uint64_t drain(Device& d, Bytes& out) {
  std::uint64_t n = 0;
  while (d.busy()) {
    const auto o = d.step(std::nullopt);
    out.insert(out.end(), o.begin(), o.end());
    ++n;
  }
  return n;
}

Device with_cells(unsigned width, std::vector<std::uint64_t> values) {
  capp::Capp c(CappConfig{width, values.size()});
  std::vector<capp::Word> words;
  for (auto v : values) words.push_back(capp::Word::from_u64(width, v));
  c.load_image(words);
  return Device(std::move(c));
}

}  // namespace

TEST_CASE("SET_TAGS acknowledges in the opcode step") {
  Device d(CappConfig{8, 4});
  CHECK(d.step(0x01) == Bytes{capp::kAck});
  CHECK(d.ready());
  CHECK(d.capp().read_tags().all());
  CHECK(d.cycles() == 1);
  CHECK(d.last_micro_step() == FsmPhase::kSetPulse);
}

TEST_CASE("SEARCH holds the line for the pulse delay then acknowledges") {
  Device d(CappConfig{8, 4});
  CHECK(d.step(0x04).empty());
  CHECK(d.search_line());
  CHECK(d.last_micro_step() == FsmPhase::kSearch1);
  for (int i = 0; i < 5; ++i) {
    CHECK(d.state().phase == FsmPhase::kIdle);
    CHECK(d.step(std::nullopt).empty());
    CHECK(d.search_line());
  }
  CHECK(d.state().phase == FsmPhase::kSearch2);
  CHECK(d.step(std::nullopt) == Bytes{capp::kAck});
  CHECK_FALSE(d.search_line());
  CHECK(d.ready());
  CHECK(d.cycles() == 7);
}

TEST_CASE("unknown opcode is refused and the device stays ready") {
  Device d(CappConfig{8, 4});
  const auto before = d.capp();
  CHECK(d.step(0xFE) == Bytes{capp::kNak});
  CHECK(d.ready());
  CHECK(d.capp() == before);
  CHECK(d.step(0x00) == Bytes{capp::kNak});
  CHECK(d.step(0x0A) == Bytes{capp::kNak});
}

TEST_CASE("no input in READY is an idle cycle") {
  Device d(CappConfig{8, 4});
  CHECK(d.step(std::nullopt).empty());
  CHECK(d.ready());
  CHECK(d.cycles() == 1);
}

TEST_CASE("LOAD_COMPARAND assembles the payload most significant byte first") {
  Device d(CappConfig{32, 4});
  const Bytes out = d.run_until_ready(Bytes{0x02, 0x12, 0x34, 0x56, 0x78});
  CHECK(out == Bytes{capp::kAck});
  CHECK(d.capp().comparand().to_u64() == 0x12345678);
  CHECK(d.cycles() == 5);
}

TEST_CASE("RECEIVE waits for the host without timing out") {
  Device d(CappConfig{16, 2});
  CHECK(d.step(0x03).empty());
  for (int i = 0; i < 100; ++i) CHECK(d.step(std::nullopt).empty());
  CHECK(d.state().phase == FsmPhase::kReceive);
  CHECK(d.step(0xAB).empty());
  CHECK(d.step(0xCD) == Bytes{capp::kAck});
  CHECK(d.capp().mask().to_u64() == 0xABCD);
}

TEST_CASE("STATUS and READ replies") {
  Device d(CappConfig{8, 4});
  CHECK(d.run_until_ready(Bytes{0x08}) == Bytes{0x00, capp::kAck});
  CHECK(d.cycles() == 2);

  auto e = with_cells(8, {0xA5, 0x00});
  e.run_until_ready(Bytes{0x01, 0x02, 0xA5, 0x03, 0x00, 0x04});
  CHECK(e.run_until_ready(Bytes{0x08}) == Bytes{0x01, capp::kAck});
  CHECK(e.run_until_ready(Bytes{0x06}) == Bytes{0xA5, capp::kAck});
}

TEST_CASE("READ of a wide word sends every byte then ACK") {
  auto d = with_cells(32, {0xDEADBEEF, 0x01020304});
  d.run_until_ready(Bytes{0x01});
  const auto start = d.cycles();
  CHECK(d.run_until_ready(Bytes{0x06}) == Bytes{0xDF, 0xAF, 0xBF, 0xEF, capp::kAck});
  CHECK(d.cycles() - start == 1 + 4);
}

TEST_CASE("every command costs exactly its advertised cycles") {
  for (const unsigned width : {8u, 16u, 32u, 64u}) {
    const CappConfig config{width, 4};
    for (std::uint8_t op = 0x01; op <= 0x09; ++op) {
      Device d(config);
      Bytes in{op};
      const auto opcode = *capp::decode_opcode(op);
      in.resize(1 + capp::request_payload_bytes(opcode, config), 0x00);
      const Bytes out = d.run_until_ready(in);
      CHECK(d.cycles() == capp::command_cycles(opcode, config));
      CHECK(out.size() == capp::response_bytes(opcode, config));
      CHECK(out.back() == capp::kAck);
    }
  }
  CHECK(capp::command_cycles(Opcode::kSearch, CappConfig{32, 4}) == 7);
  CHECK(capp::command_cycles(Opcode::kSelectFirst, CappConfig{8, 1}) == 7);
  CHECK(capp::command_cycles(Opcode::kLoadComparand, CappConfig{32, 4}) == 5);
  CHECK(capp::cycles_to_microseconds(48) == doctest::Approx(1.0));
}

TEST_CASE("bytes during busy phases are refused and discarded") {
  Device d(CappConfig{8, 4});
  d.run_until_ready(Bytes{0x02, 0x0F});
  CHECK(d.step(0x04).empty());                      // SEARCH_1
  CHECK(d.step(0x01) == Bytes{capp::kNak});         // IDLE, discarded
  CHECK_FALSE(d.capp().read_tags().any());          // SET_TAGS did not run
  Bytes out;
  CHECK(drain(d, out) == 5);
  CHECK(out == Bytes{capp::kAck});
  CHECK(d.cycles() == 2 + 7);

  auto e = with_cells(8, {0x3C});
  e.run_until_ready(Bytes{0x01});
  CHECK(e.step(0x06).empty());                                   // latch
  CHECK(e.step(0x77) == Bytes{capp::kNak, 0x3C, capp::kAck});    // NAK first
  CHECK(e.ready());
}

TEST_CASE("invariants hold along random byte streams") {
  std::mt19937_64 rng(3);
  Device d(CappConfig{16, 7});
  for (int i = 0; i < 20000; ++i) {
    const bool gap = rng() % 3 == 0;
    d.step(gap ? std::nullopt : std::optional<std::uint8_t>(rng() % 12));
    const auto bad = d.invariant_violation();
    REQUIRE_MESSAGE(!bad, bad.value_or(""));
  }
}

TEST_CASE("protocol commands act exactly like the reference model") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const unsigned width = 8 * (1 + rng() % 4);
    const std::size_t n = 1 + rng() % 16;
    const CappConfig config{width, n};
    Device d(config);
    capp::oracle::OracleState ref(width, n);
    const std::uint64_t wmask = width == 64 ? ~0ULL : (1ULL << width) - 1;
    for (int k = 0; k < 60; ++k) {
      const std::uint8_t op = 0x01 + rng() % 9;
      Bytes in{op};
      std::uint64_t value = rng() & wmask;
      if (rng() % 2) value &= 0x0F;
      capp::oracle::Op abstract;
      switch (op) {
        case 0x01: abstract = capp::oracle::SetTags{}; break;
        case 0x02: abstract = capp::oracle::LoadComparand{value}; break;
        case 0x03: abstract = capp::oracle::LoadMask{value}; break;
        case 0x04: abstract = capp::oracle::SearchPulse{}; break;
        case 0x05: abstract = capp::oracle::SelectFirst{}; break;
        case 0x06: abstract = capp::oracle::Read{}; break;
        case 0x07: abstract = capp::oracle::Write{}; break;
        case 0x08: abstract = capp::oracle::AnyTag{}; break;
        default: abstract = capp::oracle::ClearTags{}; break;
      }
      if (op == 0x02 || op == 0x03) {
        for (unsigned b = width / 8; b-- > 0;) in.push_back(static_cast<std::uint8_t>(value >> (8 * b)));
      }
      const auto expected = ref.apply(abstract);
      const Bytes out = d.run_until_ready(in);
      if (op == 0x06) {
        Bytes want;
        for (unsigned b = width / 8; b-- > 0;) want.push_back(static_cast<std::uint8_t>(*expected >> (8 * b)));
        want.push_back(capp::kAck);
        CHECK(out == want);
      } else if (op == 0x08) {
        CHECK(out == Bytes{static_cast<std::uint8_t>(*expected), capp::kAck});
      } else {
        CHECK(out == Bytes{capp::kAck});
      }
      REQUIRE(capp::oracle::equivalent(ref, d.capp()));
    }
  }
}
