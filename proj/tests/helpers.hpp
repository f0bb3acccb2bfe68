#pragma once

#include <random>
#include <string_view>
#include <vector>

#include "algstat/bitstring.hpp"

namespace algstat::testing {

inline BitString bits(std::string_view s) { return BitString::from_bits(s); }

// Every word of length 0..max_len in canonical order.
inline std::vector<BitString> all_words(std::size_t max_len) {
  std::vector<BitString> out;
  for (std::size_t len = 0; len <= max_len; ++len) {
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << len); ++v) {
      out.push_back(BitString::from_uint(v, len));
    }
  }
  return out;
}

inline BitString random_word(std::mt19937_64& rng, std::size_t max_len) {
  const std::size_t len = std::uniform_int_distribution<std::size_t>(0, max_len)(rng);
  return BitString::from_uint(rng(), len);
}

}  // namespace algstat::testing
