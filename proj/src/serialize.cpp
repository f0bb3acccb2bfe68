#include "algstat/serialize.hpp"

namespace algstat {

nlohmann::ordered_json to_json(const BitString& b) {
  nlohmann::ordered_json j;
  j["len"] = b.size();
  j["hex"] = b.hex();
  return j;
}

BitString bitstring_from_json(const nlohmann::ordered_json& j) {
  return BitString::from_hex(j.at("len").get<std::size_t>(), j.at("hex").get<std::string>());
}

}  // namespace algstat
