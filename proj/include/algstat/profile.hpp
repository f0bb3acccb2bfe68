#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "algstat/bitstring.hpp"

namespace algstat {

enum class ProfileKind { Bounded, Structure, Stochasticity, Rank };

std::string_view to_string(ProfileKind kind);

struct Provenance {
  std::uint32_t max_len = 0;
  std::uint64_t step_cap = 0;
  std::string machine_tag;

  bool operator==(const Provenance&) const = default;
};

// Budget k = 0..k_max mapped to a real value. nullopt is the TOP sentinel
// (no qualifying program or model at that budget); numerically TOP reads as
// max_len + 1.
struct Profile {
  ProfileKind kind = ProfileKind::Structure;
  Provenance provenance;
  std::vector<std::optional<double>> values;

  std::size_t k_max() const noexcept { return values.empty() ? 0 : values.size() - 1; }
  double top_value() const noexcept { return static_cast<double>(provenance.max_len) + 1.0; }
  bool is_top(std::size_t k) const noexcept { return !values[k].has_value(); }
  double at(std::size_t k) const noexcept { return values[k].value_or(top_value()); }

  bool operator==(const Profile&) const = default;
};

// Shortest decimal text that parses back to the same double.
std::string format_real(double v);

// CSV with header "k,value,kind,x_len,x_hex,L,T,machine"; TOP is written as
// the literal TOP.
std::string profile_csv(const Profile& profile, const BitString& x);

}  // namespace algstat
