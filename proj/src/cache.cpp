#include <zlib.h>

#include <cctype>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "algstat/enumerate.hpp"
#include "algstat/error.hpp"
#include "algstat/serialize.hpp"

namespace algstat {

namespace {

constexpr int kFormatVersion = 1;

using ordered_json = nlohmann::ordered_json;

std::uint32_t crc32_of(const std::string& data) {
  uLong crc = crc32(0L, Z_NULL, 0);
  return static_cast<std::uint32_t>(
      crc32(crc, reinterpret_cast<const Bytef*>(data.data()), static_cast<uInt>(data.size())));
}

std::string row_line(const BitString& output, const RunRow& row) {
  ordered_json j;
  j["output"] = to_json(output);
  j["min_len"] = row.min_len;
  j["witness"] = to_json(row.witness.raw());
  j["min_steps"] = row.min_steps;
  auto frontier = ordered_json::array();
  for (const auto& fp : row.frontier) {
    frontier.push_back({fp.len, fp.steps, to_json(fp.witness.raw())});
  }
  j["frontier"] = std::move(frontier);
  return j.dump();
}

Program parse_witness(const ordered_json& j) {
  auto p = parse_program(bitstring_from_json(j));
  if (!p) throw Error(ErrorKind::CacheCorrupt, "cached witness is not a valid program");
  return *std::move(p);
}

}  // namespace

std::filesystem::path cache_file_name(const MachineConfig& machine, const BitString& condition,
                                      std::uint32_t max_len, std::uint64_t step_cap) {
  std::string tag;
  for (char c : machine.version_tag) tag.push_back(std::isalnum(static_cast<unsigned char>(c)) ? c : '_');
  return "table_" + tag + "_c" + std::to_string(condition.size()) + "x" + condition.hex() +
         "_L" + std::to_string(max_len) + "_T" + std::to_string(step_cap) + ".jsonl";
}

void cache_store(const RunTable& table, const std::filesystem::path& path) {
  std::string body;
  for (const auto& [output, row] : table.rows) {
    body += row_line(output, row);
    body += '\n';
  }
  ordered_json header;
  header["format_version"] = kFormatVersion;
  header["machine_version_tag"] = table.machine.version_tag;
  header["condition"] = to_json(table.condition);
  header["L"] = table.max_len;
  header["T"] = table.step_cap;
  header["row_count"] = table.rows.size();
  header["checksum"] = crc32_of(body);
  ordered_json tail;
  tail["bb_by_len"] = table.bb_by_len;

  if (path.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
  }
  // Write to a sibling and rename so readers never see a half-written file.
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorKind::Io, "cannot write " + tmp.string());
    out << header.dump() << '\n' << body << tail.dump() << '\n';
    if (!out) throw Error(ErrorKind::Io, "write failed for " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw Error(ErrorKind::Io, "cannot rename " + tmp.string() + ": " + ec.message());
}

RunTable cache_load(const MachineConfig& machine, const BitString& condition,
                    std::uint32_t max_len, std::uint64_t step_cap,
                    const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::CacheMiss, "no cache file at " + path.string());

  std::string line;
  ordered_json header;
  if (!std::getline(in, line)) throw Error(ErrorKind::CacheCorrupt, "empty cache file");
  try {
    header = ordered_json::parse(line);
    if (header.at("format_version").get<int>() != kFormatVersion) {
      throw Error(ErrorKind::KeyMismatch, "unsupported cache format version");
    }
    if (header.at("machine_version_tag").get<std::string>() != machine.version_tag ||
        bitstring_from_json(header.at("condition")) != condition ||
        header.at("L").get<std::uint32_t>() != max_len ||
        header.at("T").get<std::uint64_t>() != step_cap) {
      throw Error(ErrorKind::KeyMismatch, "cache file " + path.string() + " holds a different key");
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::CacheCorrupt, std::string("bad cache header: ") + e.what());
  }

  RunTable table;
  table.machine = machine;
  table.condition = condition;
  table.max_len = max_len;
  table.step_cap = step_cap;

  try {
    const auto row_count = header.at("row_count").get<std::size_t>();
    std::string body;
    for (std::size_t i = 0; i < row_count; ++i) {
      if (!std::getline(in, line)) throw Error(ErrorKind::CacheCorrupt, "truncated row section");
      body += line;
      body += '\n';
      const auto j = ordered_json::parse(line);
      RunRow row;
      row.min_len = j.at("min_len").get<std::uint32_t>();
      row.witness = parse_witness(j.at("witness"));
      row.min_steps = j.at("min_steps").get<std::uint64_t>();
      for (const auto& fp : j.at("frontier")) {
        row.frontier.push_back(
            {fp.at(0).get<std::uint32_t>(), fp.at(1).get<std::uint64_t>(), parse_witness(fp.at(2))});
      }
      table.rows.emplace(bitstring_from_json(j.at("output")), std::move(row));
    }
    if (crc32_of(body) != header.at("checksum").get<std::uint32_t>()) {
      throw Error(ErrorKind::CacheCorrupt, "checksum mismatch in " + path.string());
    }
    if (!std::getline(in, line)) throw Error(ErrorKind::CacheCorrupt, "missing bb_by_len line");
    table.bb_by_len = ordered_json::parse(line).at("bb_by_len").get<std::vector<std::uint64_t>>();
    if (table.bb_by_len.size() != max_len + 1U) {
      throw Error(ErrorKind::CacheCorrupt, "bb_by_len has the wrong length");
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::CacheCorrupt, std::string("bad cache row: ") + e.what());
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::CacheCorrupt) throw;
    throw Error(ErrorKind::CacheCorrupt, e.what());
  }
  return table;
}

}  // namespace algstat
