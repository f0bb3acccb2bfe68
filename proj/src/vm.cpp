#include "algstat/vm.hpp"

#include "algstat/error.hpp"

namespace algstat {

std::string_view mnemonic(Opcode op) {
  switch (op) {
    case Opcode::Left: return "LEFT";
    case Opcode::Right: return "RIGHT";
    case Opcode::Flip: return "FLIP";
    case Opcode::Emit: return "EMIT";
    case Opcode::Read: return "READ";
    case Opcode::LoopOpen: return "OPEN";
    case Opcode::LoopClose: return "CLOSE";
    case Opcode::Halt: return "HALT";
  }
  return "?";
}

std::string_view to_string(ExecStatus status) {
  switch (status) {
    case ExecStatus::Halted: return "Halted";
    case ExecStatus::StepLimit: return "StepLimit";
    case ExecStatus::Invalid: return "Invalid";
  }
  return "?";
}

std::optional<Program> parse_program(const BitString& raw) {
  Program p;
  const std::size_t n = raw.size() / kOpcodeBits;
  p.opcodes_.reserve(n);
  p.partner_.assign(n, 0);
  std::vector<std::uint32_t> open;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t b = i * kOpcodeBits;
    const auto op = static_cast<Opcode>((raw[b] << 2) | (raw[b + 1] << 1) | raw[b + 2]);
    p.opcodes_.push_back(op);
    if (op == Opcode::LoopOpen) {
      open.push_back(static_cast<std::uint32_t>(i));
    } else if (op == Opcode::LoopClose) {
      if (open.empty()) return std::nullopt;
      const std::uint32_t j = open.back();
      open.pop_back();
      p.partner_[i] = j;
      p.partner_[j] = static_cast<std::uint32_t>(i);
    }
  }
  if (!open.empty()) return std::nullopt;
  p.raw_ = raw;
  return p;
}

Program program_from_bits(std::string_view bits) {
  auto p = parse_program(BitString::from_bits(bits));
  if (!p) throw Error(ErrorKind::DomainError, "invalid program '" + std::string(bits) + "'");
  return *std::move(p);
}

Interpreter::Interpreter(const Program& program, const BitString& input)
    : program_(&program), input_(&input), halted_(program.opcodes().empty()) {}

void Interpreter::step() {
  const auto& ops = program_->opcodes();
  const Opcode op = ops[ip_];
  ++steps_;

  auto cell_ref = [this]() -> std::vector<bool>::reference {
    if (head_ >= 0) {
      const auto idx = static_cast<std::size_t>(head_);
      if (idx >= right_.size()) right_.resize(idx + 1, false);
      return right_[idx];
    }
    const auto idx = static_cast<std::size_t>(-head_ - 1);
    if (idx >= left_.size()) left_.resize(idx + 1, false);
    return left_[idx];
  };

  std::size_t next = ip_ + 1;
  switch (op) {
    case Opcode::Left: --head_; break;
    case Opcode::Right: ++head_; break;
    case Opcode::Flip: cell_ref().flip(); break;
    case Opcode::Emit: output_.push_back(cell_ref()); break;
    case Opcode::Read: {
      const bool bit = input_pos_ < input_->size() && (*input_)[input_pos_];
      ++input_pos_;
      cell_ref() = bit;
      break;
    }
    case Opcode::LoopOpen:
      if (!cell_ref()) next = program_->partner(ip_) + 1;
      break;
    case Opcode::LoopClose:
      if (cell_ref()) next = program_->partner(ip_) + 1;
      break;
    case Opcode::Halt: halted_ = true; return;
  }
  ip_ = next;
  if (ip_ >= ops.size()) halted_ = true;
}

ExecOutcome execute(const Program& program, const BitString& input, std::uint64_t step_cap) {
  Interpreter it(program, input);
  while (!it.halted()) {
    if (it.steps() == step_cap) {
      return {ExecStatus::StepLimit, it.take_output(), it.steps()};
    }
    it.step();
  }
  return {ExecStatus::Halted, it.take_output(), it.steps()};
}

ExecOutcome execute_raw(const BitString& raw, const BitString& input, std::uint64_t step_cap) {
  const auto program = parse_program(raw);
  if (!program) return {};
  return execute(*program, input, step_cap);
}

}  // namespace algstat
