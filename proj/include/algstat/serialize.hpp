#pragma once

#include "json.hpp"

#include "algstat/bitstring.hpp"

namespace algstat {

// {"len": n, "hex": "..."}
nlohmann::ordered_json to_json(const BitString& b);
BitString bitstring_from_json(const nlohmann::ordered_json& j);

}  // namespace algstat
