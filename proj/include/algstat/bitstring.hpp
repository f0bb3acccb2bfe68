#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

namespace algstat {

// Finite binary word. Bits are kept one per byte as the characters '0'/'1',
// which makes hashing and printing free and is plenty for desk-scale sizes.
class BitString {
 public:
  BitString() = default;

  // Accepts only '0' and '1'; throws Error(DomainError) otherwise.
  static BitString from_bits(std::string_view bits);
  // The low `len` bits of `value`, most significant first.
  static BitString from_uint(std::uint64_t value, std::size_t len);

  std::size_t size() const noexcept { return bits_.size(); }
  bool empty() const noexcept { return bits_.empty(); }
  bool operator[](std::size_t i) const noexcept { return bits_[i] == '1'; }

  void push_back(bool bit) { bits_.push_back(bit ? '1' : '0'); }
  void append(const BitString& other) { bits_ += other.bits_; }
  void reserve(std::size_t n) { bits_.reserve(n); }

  bool is_prefix_of(const BitString& other) const noexcept {
    return bits_.size() <= other.bits_.size() &&
           other.bits_.compare(0, bits_.size(), bits_) == 0;
  }
  BitString prefix(std::size_t n) const { return BitString(bits_.substr(0, n)); }

  // "0101..." form; "" for the empty word.
  const std::string& str() const noexcept { return bits_; }

  // Serialized form: MSB-first packed bytes in lowercase hex, right-padded
  // with zero bits to a byte boundary.
  std::string hex() const;
  static BitString from_hex(std::size_t len, std::string_view hex);

  // Command-line form "len:hex".
  std::string hexlen() const { return std::to_string(size()) + ":" + hex(); }
  static BitString from_hexlen(std::string_view text);

  bool operator==(const BitString&) const = default;

  // Canonical order: shorter words first, then lexicographic.
  std::strong_ordering operator<=>(const BitString& other) const noexcept {
    if (bits_.size() != other.bits_.size()) return bits_.size() <=> other.bits_.size();
    return bits_.compare(other.bits_) <=> 0;
  }

 private:
  explicit BitString(std::string bits) : bits_(std::move(bits)) {}
  friend struct std::hash<BitString>;

  std::string bits_;
};

}  // namespace algstat

template <>
struct std::hash<algstat::BitString> {
  std::size_t operator()(const algstat::BitString& b) const noexcept {
    return std::hash<std::string>{}(b.bits_);
  }
};
