#pragma once

// KVM-8: the fixed reference description machine.
//
// A program is a bit string read as 3-bit opcodes, most significant bit
// first; 1-2 trailing bits are ignored. The machine owns a bit tape that is
// unbounded in both directions (all cells start at 0), a head at cell 0, an
// append-only output word and a read-only input word with a cursor.
//
//   000 LEFT   move head left
//   001 RIGHT  move head right
//   010 FLIP   flip current cell
//   011 EMIT   append current cell to output
//   100 READ   copy next input bit into current cell (0 once input is
//              exhausted) and advance the input cursor
//   101 OPEN   if current cell is 0, jump past the matching CLOSE
//   110 CLOSE  if current cell is 1, jump back past the matching OPEN
//   111 HALT
//
// Every executed opcode (HALT included) costs one step. Running off the end
// of the program halts without costing a step.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "algstat/bitstring.hpp"

namespace algstat {

enum class Opcode : std::uint8_t {
  Left = 0,
  Right = 1,
  Flip = 2,
  Emit = 3,
  Read = 4,
  LoopOpen = 5,
  LoopClose = 6,
  Halt = 7,
};

std::string_view mnemonic(Opcode op);

struct MachineConfig {
  std::string version_tag = "KVM-8/1";
  std::uint64_t default_step_cap = 1024;

  bool operator==(const MachineConfig&) const = default;
};

inline constexpr std::size_t kOpcodeBits = 3;

// A decoded, bracket-checked program. Only parse_program creates these, so a
// Program in hand is always valid.
class Program {
 public:
  Program() = default;  // the empty program

  const BitString& raw() const noexcept { return raw_; }
  std::size_t length() const noexcept { return raw_.size(); }
  const std::vector<Opcode>& opcodes() const noexcept { return opcodes_; }
  std::size_t ignored_tail_bits() const noexcept { return raw_.size() % kOpcodeBits; }
  // For an OPEN/CLOSE at index i, the index of its partner.
  std::uint32_t partner(std::size_t i) const noexcept { return partner_[i]; }

  bool operator==(const Program& other) const noexcept { return raw_ == other.raw_; }

 private:
  friend std::optional<Program> parse_program(const BitString& raw);

  BitString raw_;
  std::vector<Opcode> opcodes_;
  std::vector<std::uint32_t> partner_;
};

// nullopt is the invalid-marker: some OPEN or CLOSE is unmatched.
std::optional<Program> parse_program(const BitString& raw);

// Convenience for tests and tools: parses "011..." and throws on invalid.
Program program_from_bits(std::string_view bits);

enum class ExecStatus { Halted, StepLimit, Invalid };

std::string_view to_string(ExecStatus status);

struct ExecOutcome {
  ExecStatus status = ExecStatus::Invalid;
  BitString output;
  std::uint64_t steps = 0;

  bool operator==(const ExecOutcome&) const = default;
};

// Small-step interpreter. execute() is the usual entry point; the stepping
// interface exists for lockstep (dovetailed) runs.
class Interpreter {
 public:
  Interpreter(const Program& program, const BitString& input);

  bool halted() const noexcept { return halted_; }
  std::uint64_t steps() const noexcept { return steps_; }
  const BitString& output() const noexcept { return output_; }
  BitString take_output() noexcept { return std::move(output_); }

  // Executes one opcode. Precondition: !halted().
  void step();

 private:
  const Program* program_;
  const BitString* input_;
  std::size_t ip_ = 0;
  std::size_t input_pos_ = 0;
  std::int64_t head_ = 0;
  // Cells 0, 1, 2, ... and cells -1, -2, ...
  std::vector<bool> right_;
  std::vector<bool> left_;
  BitString output_;
  std::uint64_t steps_ = 0;
  bool halted_ = false;
};

ExecOutcome execute(const Program& program, const BitString& input, std::uint64_t step_cap);

// Parses and executes; an invalid program yields status Invalid, empty
// output and zero steps.
ExecOutcome execute_raw(const BitString& raw, const BitString& input, std::uint64_t step_cap);

}  // namespace algstat
