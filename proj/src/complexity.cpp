#include "algstat/complexity.hpp"

#include "algstat/error.hpp"

namespace algstat {

namespace {

ComplexityValue lookup(const BitString& x, const RunTable& table) {
  ComplexityValue v{std::nullopt, table.max_len, table.step_cap};
  if (const RunRow* row = table.find(x)) v.bits = row->min_len;
  return v;
}

}  // namespace

Provenance provenance_of(const RunTable& table) {
  return {table.max_len, table.step_cap, table.machine.version_tag};
}

ComplexityValue plain_complexity(const BitString& x, const RunTable& table) {
  if (!table.condition.empty()) {
    throw Error(ErrorKind::ConditionMismatch, "plain complexity needs an unconditioned table");
  }
  return lookup(x, table);
}

ComplexityValue conditional_complexity(const BitString& x, const BitString& condition,
                                       const RunTable& table) {
  if (table.condition != condition) {
    throw Error(ErrorKind::ConditionMismatch,
                "table condition " + table.condition.hexlen() + " != " + condition.hexlen());
  }
  return lookup(x, table);
}

ComplexityValue time_bounded_complexity(const BitString& x, std::uint64_t t, const RunTable& table) {
  if (t > table.step_cap) {
    throw Error(ErrorKind::CapExceeded, "t=" + std::to_string(t) + " exceeds table T=" +
                                            std::to_string(table.step_cap));
  }
  ComplexityValue v{std::nullopt, table.max_len, table.step_cap};
  if (const RunRow* row = table.find(x)) {
    for (const auto& fp : row->frontier) {
      if (fp.steps <= t) {
        v.bits = fp.len;
        break;
      }
    }
  }
  return v;
}

std::uint64_t busy_beaver_bound(std::uint32_t k, const RunTable& table) {
  if (k > table.max_len) {
    throw Error(ErrorKind::OutOfRange, "k=" + std::to_string(k) + " exceeds table L=" +
                                           std::to_string(table.max_len));
  }
  return table.bb_by_len[k];
}

Profile depth_profile(const BitString& x, const RunTable& table) {
  const RunRow* row = table.find(x);
  if (!row) throw Error(ErrorKind::AbsentString, x.hexlen() + " has no program in the table");
  Profile p;
  p.kind = ProfileKind::Bounded;
  p.provenance = provenance_of(table);
  p.values.resize(table.max_len + 1);
  for (std::uint32_t k = 0; k <= table.max_len; ++k) {
    const auto kt = time_bounded_complexity(x, table.bb_by_len[k], table);
    if (!kt.infinite()) p.values[k] = static_cast<double>(kt.value()) - row->min_len;
  }
  return p;
}

Program print_program(const BitString& x) {
  static const BitString kFlip = BitString::from_bits("010");
  static const BitString kEmit = BitString::from_bits("011");
  BitString raw;
  bool cell = false;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] != cell) {
      raw.append(kFlip);
      cell = x[i];
    }
    raw.append(kEmit);
  }
  return *parse_program(raw);
}

}  // namespace algstat
