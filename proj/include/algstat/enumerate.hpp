#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <vector>

#include "algstat/bitstring.hpp"
#include "algstat/vm.hpp"

namespace algstat {

// Programs of raw length <= L number 2^(L+1) - 1; asking for more than the
// ceiling is refused with Error(ResourceBudget).
inline constexpr std::uint64_t kDefaultEnumerationCeiling = std::uint64_t{1} << 26;

struct EnumerationOptions {
  unsigned workers = 0;  // 0 = hardware concurrency
  std::uint64_t ceiling = kDefaultEnumerationCeiling;
};

void check_enumeration_budget(std::uint32_t max_len, std::uint64_t ceiling);

// Every valid program of raw length 0..max_len in canonical order (length,
// then lexicographic raw bits).
std::vector<Program> enumerate_programs(std::uint32_t max_len);
void for_each_program(std::uint32_t max_len, const std::function<void(const Program&)>& fn);

// A (length, steps) point on an output's Pareto frontier together with the
// lexicographically smallest program of that length reaching it in that
// many steps.
struct FrontierPoint {
  std::uint32_t len = 0;
  std::uint64_t steps = 0;
  Program witness;

  bool operator==(const FrontierPoint&) const = default;
};

struct RunRow {
  std::uint32_t min_len = 0;
  Program witness;             // lexicographically smallest program of min_len
  std::uint64_t min_steps = 0; // fewest steps among programs of min_len
  // Strictly increasing len, strictly decreasing steps; front() is at min_len.
  std::vector<FrontierPoint> frontier;

  bool operator==(const RunRow&) const = default;
};

struct RunTable {
  MachineConfig machine;
  BitString condition;
  std::uint32_t max_len = 0;
  std::uint64_t step_cap = 0;
  std::map<BitString, RunRow> rows;
  // bb_by_len[k]: most steps taken by a program of length <= k that halted
  // within step_cap.
  std::vector<std::uint64_t> bb_by_len;

  const RunRow* find(const BitString& output) const {
    auto it = rows.find(output);
    return it == rows.end() ? nullptr : &it->second;
  }

  bool operator==(const RunTable&) const = default;
};

RunTable build_run_table(const MachineConfig& machine, const BitString& condition,
                         std::uint32_t max_len, std::uint64_t step_cap,
                         const EnumerationOptions& options = {});

// Outputs in order of first appearance when every program of length <= m is
// run in lockstep rounds against the table's condition (round r advances
// each live program by one step; within a round programs are taken in
// canonical order). Reads the answer off the Pareto frontiers.
std::vector<BitString> first_appearance_order(const RunTable& table, std::uint32_t m);

std::vector<BitString> dovetail_first_appearance(std::uint32_t m, std::uint64_t step_cap,
                                                 const EnumerationOptions& options = {},
                                                 const MachineConfig& machine = {});

// Cache file: a JSON header line, one JSON line per row, one bb_by_len line.
void cache_store(const RunTable& table, const std::filesystem::path& path);
RunTable cache_load(const MachineConfig& machine, const BitString& condition,
                    std::uint32_t max_len, std::uint64_t step_cap,
                    const std::filesystem::path& path);

// File name used by the CLI for a given key inside a cache directory.
std::filesystem::path cache_file_name(const MachineConfig& machine, const BitString& condition,
                                      std::uint32_t max_len, std::uint64_t step_cap);

}  // namespace algstat
