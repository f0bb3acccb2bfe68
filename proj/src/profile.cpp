#include "algstat/profile.hpp"

#include <array>
#include <charconv>

namespace algstat {

std::string_view to_string(ProfileKind kind) {
  switch (kind) {
    case ProfileKind::Bounded: return "bounded";
    case ProfileKind::Structure: return "structure";
    case ProfileKind::Stochasticity: return "stochasticity";
    case ProfileKind::Rank: return "rank";
  }
  return "?";
}

std::string format_real(double v) {
  if (v == 0.0) return "0";  // folds -0
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), end);
}

std::string profile_csv(const Profile& profile, const BitString& x) {
  std::string out = "k,value,kind,x_len,x_hex,L,T,machine\n";
  const std::string suffix = "," + std::string(to_string(profile.kind)) + "," +
                             std::to_string(x.size()) + "," + x.hex() + "," +
                             std::to_string(profile.provenance.max_len) + "," +
                             std::to_string(profile.provenance.step_cap) + "," +
                             profile.provenance.machine_tag + "\n";
  for (std::size_t k = 0; k < profile.values.size(); ++k) {
    out += std::to_string(k);
    out += ',';
    out += profile.is_top(k) ? std::string("TOP") : format_real(*profile.values[k]);
    out += suffix;
  }
  return out;
}

}  // namespace algstat
