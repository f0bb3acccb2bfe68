#include "algstat/bitstring.hpp"

#include <charconv>

#include "algstat/error.hpp"

namespace algstat {

namespace {

int hex_digit(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Usage: return "Usage";
    case ErrorKind::ResourceBudget: return "ResourceBudget";
    case ErrorKind::CacheMiss: return "CacheMiss";
    case ErrorKind::CacheCorrupt: return "CacheCorrupt";
    case ErrorKind::KeyMismatch: return "KeyMismatch";
    case ErrorKind::Io: return "Io";
    case ErrorKind::MalformedEncoding: return "MalformedEncoding";
    case ErrorKind::NonCanonical: return "NonCanonical";
    case ErrorKind::EmptySet: return "EmptySet";
    case ErrorKind::ConditionMismatch: return "ConditionMismatch";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::AbsentString: return "AbsentString";
    case ErrorKind::NotMember: return "NotMember";
    case ErrorKind::NoModel: return "NoModel";
    case ErrorKind::NoSufficientStatistic: return "NoSufficientStatistic";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::ProvenanceMismatch: return "ProvenanceMismatch";
    case ErrorKind::OracleScaleExceeded: return "OracleScaleExceeded";
  }
  return "Unknown";
}

BitString BitString::from_bits(std::string_view bits) {
  for (char c : bits) {
    if (c != '0' && c != '1') {
      throw Error(ErrorKind::DomainError, "not a bit string: '" + std::string(bits) + "'");
    }
  }
  return BitString(std::string(bits));
}

BitString BitString::from_uint(std::uint64_t value, std::size_t len) {
  std::string bits(len, '0');
  for (std::size_t i = 0; i < len; ++i) {
    if ((value >> (len - 1 - i)) & 1U) bits[i] = '1';
  }
  return BitString(std::move(bits));
}

std::string BitString::hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  const std::size_t nbytes = (bits_.size() + 7) / 8;
  std::string out;
  out.reserve(nbytes * 2);
  for (std::size_t b = 0; b < nbytes; ++b) {
    unsigned byte = 0;
    for (std::size_t i = 0; i < 8; ++i) {
      const std::size_t pos = b * 8 + i;
      byte <<= 1;
      if (pos < bits_.size() && bits_[pos] == '1') byte |= 1U;
    }
    out.push_back(kDigits[byte >> 4]);
    out.push_back(kDigits[byte & 0xF]);
  }
  return out;
}

BitString BitString::from_hex(std::size_t len, std::string_view hex) {
  const std::size_t nbytes = (len + 7) / 8;
  if (hex.size() != nbytes * 2) {
    throw Error(ErrorKind::DomainError, "hex field has " + std::to_string(hex.size()) +
                                            " digits, expected " + std::to_string(nbytes * 2) +
                                            " for len " + std::to_string(len));
  }
  std::string bits;
  bits.reserve(nbytes * 8);
  for (char c : hex) {
    const int d = hex_digit(c);
    if (d < 0) throw Error(ErrorKind::DomainError, "bad hex digit '" + std::string(1, c) + "'");
    for (int i = 3; i >= 0; --i) bits.push_back(((d >> i) & 1) ? '1' : '0');
  }
  // Padding must be zero so that serialization is a bijection.
  if (bits.find('1', len) != std::string::npos) {
    throw Error(ErrorKind::DomainError, "non-zero padding bits in hex '" + std::string(hex) + "'");
  }
  bits.resize(len);
  return BitString(std::move(bits));
}

BitString BitString::from_hexlen(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw Error(ErrorKind::Usage, "expected len:hex, got '" + std::string(text) + "'");
  }
  std::size_t len = 0;
  const auto lenpart = text.substr(0, colon);
  auto [ptr, ec] = std::from_chars(lenpart.data(), lenpart.data() + lenpart.size(), len);
  if (ec != std::errc() || ptr != lenpart.data() + lenpart.size() || lenpart.empty()) {
    throw Error(ErrorKind::Usage, "bad length in '" + std::string(text) + "'");
  }
  try {
    return from_hex(len, text.substr(colon + 1));
  } catch (const Error& e) {
    throw Error(ErrorKind::Usage, e.what());
  }
}

}  // namespace algstat
