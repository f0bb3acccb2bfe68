#pragma once

// Self-delimiting encodings. An element w is written with every bit doubled
// followed by the terminator 01; a set is its elements in canonical order
// followed by the list terminator 10. A program "describes" a set only if it
// prints this exact canonical encoding.

#include <optional>
#include <span>
#include <vector>

#include "algstat/bitstring.hpp"

namespace algstat {

class FiniteSetModel {
 public:
  // Sorts (length, then lexicographic) and deduplicates; throws
  // Error(EmptySet) on an empty list.
  static FiniteSetModel canonicalize(std::span<const BitString> words);

  const std::vector<BitString>& elements() const noexcept { return elements_; }
  std::size_t cardinality() const noexcept { return elements_.size(); }
  double log_size() const;
  bool contains(const BitString& w) const;

  bool operator==(const FiniteSetModel&) const = default;
  // Lexicographic over the canonical element lists.
  std::strong_ordering operator<=>(const FiniteSetModel& other) const;

 private:
  std::vector<BitString> elements_;
};

inline FiniteSetModel canonicalize(std::span<const BitString> words) {
  return FiniteSetModel::canonicalize(words);
}

BitString encode_element(const BitString& w);
BitString encode_set(const FiniteSetModel& set);

enum class DecodeStatus { Ok, MalformedEncoding, NonCanonical };

struct DecodeResult {
  DecodeStatus status = DecodeStatus::MalformedEncoding;
  std::optional<FiniteSetModel> set;
};

// Non-throwing variant used when scanning many candidate outputs.
DecodeResult try_decode_set(const BitString& bits);

// Throws Error(MalformedEncoding) or Error(NonCanonical).
FiniteSetModel decode_set(const BitString& bits);

}  // namespace algstat
