#pragma once

// Deliberately naive re-derivation of everything above the VM and codec:
// one program at a time, every raw length (trailing bits included), no
// sharding, no frontier shortcuts. Used to certify the optimized pipeline.

#include <cstdint>
#include <optional>
#include <vector>

#include "algstat/enumerate.hpp"
#include "algstat/models.hpp"
#include "algstat/profile.hpp"
#include "algstat/profiles.hpp"

namespace algstat::oracle {

inline constexpr std::uint32_t kMaxLen = 14;

// Throws Error(OracleScaleExceeded) above kMaxLen.
RunTable run_table(const BitString& condition, std::uint32_t max_len, std::uint64_t step_cap);

// Shortest program of length <= max_len printing x within t steps, found by
// re-running every program under cap t.
std::optional<std::uint32_t> time_bounded_complexity(const BitString& x, std::uint32_t max_len,
                                                     std::uint64_t t);

// Most steps taken by a program of length <= k halting within step_cap.
std::uint64_t busy_beaver(std::uint32_t k, std::uint64_t step_cap);

std::vector<ModelRecord> models(std::uint32_t max_len, std::uint64_t step_cap,
                                std::uint32_t max_elem_len);

// Lockstep simulation of every program of length <= m.
std::vector<BitString> first_appearance(std::uint32_t m, std::uint64_t step_cap);

RankProfile rank_profile(const BitString& x, std::uint32_t m_lo, std::uint32_t m_hi,
                         std::uint64_t step_cap);

struct Profiles {
  bool present = false;  // x has a program within (L, T)
  bool has_model = false;
  Profile structure_raw;
  Profile structure;  // normalized
  Profile stochasticity;
  Profile stochasticity_clamped;
  Profile bounded;
};

Profiles profiles(const BitString& x, std::uint32_t max_len, std::uint64_t step_cap,
                  std::uint32_t max_elem_len);

}  // namespace algstat::oracle
