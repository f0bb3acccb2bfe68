#include "doctest.h"

#include <random>

#include "algstat/enumerate.hpp"
#include "algstat/error.hpp"
#include "algstat/vm.hpp"
#include "helpers.hpp"

using namespace algstat;
using algstat::testing::bits;

TEST_CASE("bit string serialization") {
  CHECK(bits("").hex() == "");
  CHECK(bits("1").hex() == "80");
  CHECK(bits("0000000011").hex() == "00c0");
  CHECK(bits("1").hexlen() == "1:80");
  CHECK(BitString::from_hexlen("10:00c0") == bits("0000000011"));
  CHECK(BitString::from_hexlen("0:") == bits(""));
  CHECK_THROWS_AS(BitString::from_hex(1, "c0"), Error);  // padding bit set
  CHECK_THROWS_AS(BitString::from_hex(9, "ff"), Error);  // too short
  CHECK_THROWS_AS(BitString::from_hexlen("nope"), Error);
  CHECK_THROWS_AS(BitString::from_bits("012"), Error);

  std::mt19937_64 rng(7);
  for (int i = 0; i < 500; ++i) {
    const auto w = algstat::testing::random_word(rng, 64);
    CHECK(BitString::from_hexlen(w.hexlen()) == w);
  }
}

TEST_CASE("canonical order is length first") {
  CHECK(bits("1") < bits("00"));
  CHECK(bits("01") < bits("10"));
  CHECK(bits("") < bits("0"));
}

TEST_CASE("parse_program") {
  SUBCASE("empty program") {
    const auto p = parse_program(bits(""));
    REQUIRE(p);
    CHECK(p->opcodes().empty());
  }
  SUBCASE("matched loop") {
    const auto p = parse_program(bits("101110"));
    REQUIRE(p);
    CHECK(p->opcodes() == std::vector{Opcode::LoopOpen, Opcode::LoopClose});
    CHECK(p->partner(0) == 1);
    CHECK(p->partner(1) == 0);
  }
  SUBCASE("unmatched brackets are invalid") {
    CHECK_FALSE(parse_program(bits("101")));
    CHECK_FALSE(parse_program(bits("110")));
    CHECK_FALSE(parse_program(bits("110101")));
    CHECK_FALSE(parse_program(bits("101101110")));
  }
  SUBCASE("trailing bits are ignored") {
    const auto p = parse_program(bits("01101"));
    REQUIRE(p);
    CHECK(p->opcodes() == std::vector{Opcode::Emit});
    CHECK(p->ignored_tail_bits() == 2);
    CHECK(p->length() == 5);
    // The tail would be an OPEN if it were complete; it must not count.
    CHECK(parse_program(bits("01110")));
  }
}

TEST_CASE("execute: hand-derived runs") {
  const BitString none;
  CHECK(execute(program_from_bits(""), none, 100) == ExecOutcome{ExecStatus::Halted, bits(""), 0});
  CHECK(execute(program_from_bits("011111"), none, 100) ==
        ExecOutcome{ExecStatus::Halted, bits("0"), 2});
  CHECK(execute(program_from_bits("010011"), none, 100) ==
        ExecOutcome{ExecStatus::Halted, bits("1"), 2});
  CHECK(execute(program_from_bits("010011"), none, 1) ==
        ExecOutcome{ExecStatus::StepLimit, bits(""), 1});
  // Exactly enough steps, then falling off the end, is a halt.
  CHECK(execute(program_from_bits("010011"), none, 2).status == ExecStatus::Halted);
  // HALT costs a step of its own.
  CHECK(execute(program_from_bits("011111"), none, 1) ==
        ExecOutcome{ExecStatus::StepLimit, bits("0"), 1});
  CHECK(execute(program_from_bits(""), none, 0).status == ExecStatus::Halted);
}

TEST_CASE("execute: loops") {
  const BitString none;
  // FLIP OPEN FLIP CLOSE EMIT: enter (cell 1), clear, leave, emit 0.
  CHECK(execute(program_from_bits("010101010110011"), none, 100) ==
        ExecOutcome{ExecStatus::Halted, bits("0"), 5});
  // OPEN EMIT CLOSE HALT on a zero cell skips straight to HALT.
  CHECK(execute(program_from_bits("101011110111"), none, 100) ==
        ExecOutcome{ExecStatus::Halted, bits(""), 2});
  // FLIP OPEN EMIT CLOSE never clears the cell.
  const auto spin = execute(program_from_bits("010101011110"), none, 50);
  CHECK(spin.status == ExecStatus::StepLimit);
  CHECK(spin.steps == 50);
  // flip, open, then 24 rounds of (emit, close): CLOSE lands after OPEN.
  CHECK(spin.output == BitString::from_bits(std::string(24, '1')));
}

TEST_CASE("execute: tape and input") {
  const BitString none;
  CHECK(execute(program_from_bits("000010011"), none, 10).output == bits("1"));
  // Moving away and back finds the flipped cell again.
  CHECK(execute(program_from_bits("010001000011"), none, 10).output == bits("1"));
  CHECK(execute(program_from_bits("010000011"), none, 10).output == bits("0"));
  CHECK(execute(program_from_bits("100011"), bits("1"), 10).output == bits("1"));
  CHECK(execute(program_from_bits("100011"), bits(""), 10).output == bits("0"));
  CHECK(execute(program_from_bits("100100011"), bits("10"), 10).output == bits("0"));
  CHECK(execute(program_from_bits("100011100011"), bits("10"), 10).output == bits("10"));
}

TEST_CASE("execute_raw rejects invalid programs") {
  CHECK(execute_raw(bits("101"), {}, 10) == ExecOutcome{ExecStatus::Invalid, bits(""), 0});
}

TEST_CASE("input safety: exhausted input reads as zero") {
  // Padding the input with explicit zeros must not change any outcome.
  const std::vector<BitString> inputs = algstat::testing::all_words(2);
  for_each_program(9, [&](const Program& p) {
    for (const auto& in : inputs) {
      BitString padded = in;
      for (int i = 0; i < 8; ++i) padded.push_back(false);
      const auto a = execute(p, in, 64);
      CHECK(a == execute(p, padded, 64));
      CHECK(a == execute(p, in, 64));
      CHECK(a.steps <= 64);
    }
  });
}

TEST_CASE("cap monotonicity and determinism") {
  std::mt19937_64 rng(2024);
  std::vector<Program> programs = enumerate_programs(12);
  std::uniform_int_distribution<std::size_t> pick(0, programs.size() - 1);
  std::uniform_int_distribution<std::uint64_t> cap(0, 40);
  for (int i = 0; i < 5000; ++i) {
    const Program& p = programs[pick(rng)];
    auto t1 = cap(rng);
    auto t2 = cap(rng);
    if (t1 > t2) std::swap(t1, t2);
    const auto a = execute(p, {}, t1);
    const auto b = execute(p, {}, t2);
    CHECK(a.output.is_prefix_of(b.output));
    CHECK(a.steps <= t1);
    if (a.status == ExecStatus::Halted) CHECK(a == b);
    if (a.status == ExecStatus::StepLimit) CHECK(a.steps == t1);
  }
}
