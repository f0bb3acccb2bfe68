#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "algstat/enumerate.hpp"
#include "algstat/error.hpp"
#include "helpers.hpp"

using namespace algstat;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("algstat_cache_test_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

ErrorKind load_error(const MachineConfig& m, const BitString& c, std::uint32_t L, std::uint64_t T,
                     const fs::path& p) {
  try {
    cache_load(m, c, L, T, p);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("cache_load succeeded");
  return ErrorKind::Usage;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const fs::path& p, const std::string& s) {
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  out << s;
}

}  // namespace

TEST_CASE("cache round trip and failure modes") {
  TempDir dir;
  const MachineConfig machine;
  const auto cond = algstat::testing::bits("0001");
  const auto table = build_run_table(machine, cond, 12, 64, {1});
  const auto path = dir.path / cache_file_name(machine, cond, 12, 64);

  CHECK(load_error(machine, cond, 12, 64, path) == ErrorKind::CacheMiss);

  cache_store(table, path);
  CHECK(cache_load(machine, cond, 12, 64, path) == table);

  SUBCASE("stored bytes are stable") {
    const auto first = slurp(path);
    cache_store(build_run_table(machine, cond, 12, 64, {4}), path);
    CHECK(slurp(path) == first);
  }
  SUBCASE("key mismatch") {
    MachineConfig other;
    other.version_tag = "KVM-8/2";
    CHECK(load_error(other, cond, 12, 64, path) == ErrorKind::KeyMismatch);
    CHECK(load_error(machine, {}, 12, 64, path) == ErrorKind::KeyMismatch);
    CHECK(load_error(machine, cond, 11, 64, path) == ErrorKind::KeyMismatch);
    CHECK(load_error(machine, cond, 12, 65, path) == ErrorKind::KeyMismatch);
  }
  SUBCASE("truncated file") {
    const auto text = slurp(path);
    spit(path, text.substr(0, text.size() / 2));
    CHECK(load_error(machine, cond, 12, 64, path) == ErrorKind::CacheCorrupt);
    spit(path, "");
    CHECK(load_error(machine, cond, 12, 64, path) == ErrorKind::CacheCorrupt);
  }
  SUBCASE("tampered row") {
    auto text = slurp(path);
    const auto pos = text.find("\"min_len\":3");
    REQUIRE(pos != std::string::npos);
    text.replace(pos, 11, "\"min_len\":4");
    spit(path, text);
    CHECK(load_error(machine, cond, 12, 64, path) == ErrorKind::CacheCorrupt);
  }
  SUBCASE("header layout") {
    const auto text = slurp(path);
    const auto header = text.substr(0, text.find('\n'));
    CHECK(header.find("\"format_version\":1") != std::string::npos);
    CHECK(header.find("\"machine_version_tag\":\"KVM-8/1\"") != std::string::npos);
    CHECK(header.find("\"condition\":{\"len\":4,\"hex\":\"10\"}") != std::string::npos);
    CHECK(header.find("\"row_count\":" + std::to_string(table.rows.size())) != std::string::npos);
    CHECK(text.find("{\"bb_by_len\":[") != std::string::npos);
  }
}
