#pragma once

// Complexity quantities read off run tables. Everything here is bounded by
// the table's (L, T): "Infinite" means no program of length <= L produced
// the string within T steps, not that none exists.

#include <cstdint>
#include <optional>

#include "algstat/enumerate.hpp"
#include "algstat/profile.hpp"

namespace algstat {

struct ComplexityValue {
  std::optional<std::uint32_t> bits;  // nullopt = Infinite
  std::uint32_t max_len = 0;
  std::uint64_t step_cap = 0;

  bool infinite() const noexcept { return !bits.has_value(); }
  std::uint32_t value() const { return bits.value(); }

  bool operator==(const ComplexityValue&) const = default;
};

ComplexityValue plain_complexity(const BitString& x, const RunTable& table);

// `condition` is the encoded condition the table was built against
// (encode_element(y) or encode_set(S)).
ComplexityValue conditional_complexity(const BitString& x, const BitString& condition,
                                       const RunTable& table);

// Shortest program emitting x within t <= table.step_cap steps.
ComplexityValue time_bounded_complexity(const BitString& x, std::uint64_t t, const RunTable& table);

std::uint64_t busy_beaver_bound(std::uint32_t k, const RunTable& table);

// k -> K^{B(k)}(x) - C(x) for k = 0..L.
Profile depth_profile(const BitString& x, const RunTable& table);

// Flip when the current cell differs from the next bit, then emit. The head
// never moves, so the cell always holds the previous output bit.
Program print_program(const BitString& x);

Provenance provenance_of(const RunTable& table);

}  // namespace algstat
