#include "algstat/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <thread>
#include <tuple>
#include <unordered_map>

#include "algstat/error.hpp"

namespace algstat {

namespace {

constexpr std::uint64_t kNone = ~std::uint64_t{0};
constexpr std::uint32_t kShardBits = 12;

// Best observations for one output within one program length class. Programs
// of the same length are identified by their raw bits read as an integer,
// so numeric order is lexicographic order.
struct ClassBest {
  std::uint64_t min_steps = kNone;
  std::uint64_t steps_witness = kNone;  // smallest program with min_steps
  std::uint64_t first = kNone;          // smallest program overall

  void observe(std::uint64_t program, std::uint64_t steps) {
    first = std::min(first, program);
    if (steps < min_steps || (steps == min_steps && program < steps_witness)) {
      min_steps = steps;
      steps_witness = program;
    }
  }

  void merge(const ClassBest& o) {
    first = std::min(first, o.first);
    if (o.min_steps < min_steps || (o.min_steps == min_steps && o.steps_witness < steps_witness)) {
      min_steps = o.min_steps;
      steps_witness = o.steps_witness;
    }
  }
};

struct Shard {
  std::uint32_t len;
  std::uint64_t begin;
  std::uint64_t end;
};

struct ShardResult {
  std::unordered_map<BitString, ClassBest> best;
  std::uint64_t max_halt_steps = 0;
  bool any_halted = false;
};

// Programs whose length is not a multiple of three behave exactly like their
// truncation, so only lengths 0, 3, 6, ... are executed. A trailing-bit
// variant is longer at equal steps and never reaches a row or a frontier.
std::vector<Shard> make_shards(std::uint32_t max_len) {
  std::vector<Shard> shards;
  for (std::uint32_t len = 0; len <= max_len; len += kOpcodeBits) {
    const std::uint64_t count = std::uint64_t{1} << len;
    const std::uint64_t chunk = std::uint64_t{1} << std::min(len, kShardBits);
    for (std::uint64_t b = 0; b < count; b += chunk) shards.push_back({len, b, b + chunk});
  }
  return shards;
}

ShardResult run_shard(const Shard& shard, const BitString& condition, std::uint64_t step_cap) {
  ShardResult r;
  for (std::uint64_t v = shard.begin; v < shard.end; ++v) {
    const auto program = parse_program(BitString::from_uint(v, shard.len));
    if (!program) continue;
    auto outcome = execute(*program, condition, step_cap);
    if (outcome.status != ExecStatus::Halted) continue;
    r.any_halted = true;
    r.max_halt_steps = std::max(r.max_halt_steps, outcome.steps);
    r.best[std::move(outcome.output)].observe(v, outcome.steps);
  }
  return r;
}

Program program_at(std::uint32_t len, std::uint64_t v) {
  return *parse_program(BitString::from_uint(v, len));
}

unsigned resolve_workers(unsigned requested) {
  if (requested != 0) return requested;
  return std::max(1U, std::thread::hardware_concurrency());
}

}  // namespace

void check_enumeration_budget(std::uint32_t max_len, std::uint64_t ceiling) {
  if (max_len >= 63 || (std::uint64_t{1} << (max_len + 1)) > ceiling) {
    throw Error(ErrorKind::ResourceBudget,
                "enumerating programs up to length " + std::to_string(max_len) +
                    " exceeds the ceiling of " + std::to_string(ceiling) + " programs");
  }
}

void for_each_program(std::uint32_t max_len, const std::function<void(const Program&)>& fn) {
  for (std::uint32_t len = 0; len <= max_len; ++len) {
    const std::uint64_t count = std::uint64_t{1} << len;
    for (std::uint64_t v = 0; v < count; ++v) {
      if (auto p = parse_program(BitString::from_uint(v, len))) fn(*p);
    }
  }
}

std::vector<Program> enumerate_programs(std::uint32_t max_len) {
  check_enumeration_budget(max_len, kDefaultEnumerationCeiling);
  std::vector<Program> out;
  for_each_program(max_len, [&](const Program& p) { out.push_back(p); });
  return out;
}

RunTable build_run_table(const MachineConfig& machine, const BitString& condition,
                         std::uint32_t max_len, std::uint64_t step_cap,
                         const EnumerationOptions& options) {
  check_enumeration_budget(max_len, options.ceiling);

  const auto shards = make_shards(max_len);
  std::vector<ShardResult> results(shards.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < shards.size(); i = next++) {
      results[i] = run_shard(shards[i], condition, step_cap);
    }
  };
  const unsigned nworkers =
      std::min<std::size_t>(resolve_workers(options.workers), shards.size());
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 1; w < nworkers; ++w) pool.emplace_back(worker);
    worker();
  }

  // Merge. Every reduction is a min or max, so the result does not depend on
  // which worker ran which shard.
  const std::size_t nclasses = max_len / kOpcodeBits + 1;
  std::unordered_map<BitString, std::vector<ClassBest>> merged;
  std::vector<std::uint64_t> bb_class(nclasses, 0);
  for (std::size_t i = 0; i < shards.size(); ++i) {
    const std::size_t cls = shards[i].len / kOpcodeBits;
    auto& r = results[i];
    if (r.any_halted) bb_class[cls] = std::max(bb_class[cls], r.max_halt_steps);
    for (auto& [output, best] : r.best) {
      auto& slot = merged[output];
      if (slot.empty()) slot.resize(nclasses);
      slot[cls].merge(best);
    }
    r = ShardResult{};
  }

  RunTable table;
  table.machine = machine;
  table.condition = condition;
  table.max_len = max_len;
  table.step_cap = step_cap;
  for (auto& [output, classes] : merged) {
    RunRow row;
    std::uint64_t best_steps = kNone;
    for (std::size_t cls = 0; cls < nclasses; ++cls) {
      const ClassBest& c = classes[cls];
      if (c.first == kNone) continue;
      const auto len = static_cast<std::uint32_t>(cls * kOpcodeBits);
      if (row.frontier.empty()) {
        row.min_len = len;
        row.witness = program_at(len, c.first);
        row.min_steps = c.min_steps;
      }
      if (c.min_steps < best_steps) {
        best_steps = c.min_steps;
        row.frontier.push_back({len, c.min_steps, program_at(len, c.steps_witness)});
      }
    }
    table.rows.emplace(output, std::move(row));
  }

  table.bb_by_len.resize(max_len + 1);
  std::uint64_t running = 0;
  for (std::uint32_t k = 0; k <= max_len; ++k) {
    if (k % kOpcodeBits == 0) running = std::max(running, bb_class[k / kOpcodeBits]);
    table.bb_by_len[k] = running;
  }
  return table;
}

std::vector<BitString> first_appearance_order(const RunTable& table, std::uint32_t m) {
  if (m > table.max_len) {
    throw Error(ErrorKind::OutOfRange, "m=" + std::to_string(m) + " exceeds table L=" +
                                           std::to_string(table.max_len));
  }
  // Key: (halting round, program length, program bits). The minimizing
  // (steps, length) pair over programs of length <= m is never dominated, so
  // it is one of the frontier points.
  using Key = std::tuple<std::uint64_t, std::uint32_t, const BitString*>;
  std::vector<std::pair<Key, const BitString*>> order;
  for (const auto& [output, row] : table.rows) {
    const FrontierPoint* best = nullptr;
    for (const auto& fp : row.frontier) {
      if (fp.len > m) break;
      best = &fp;  // steps strictly decrease along the frontier
    }
    if (best) order.push_back({{best->steps, best->len, &best->witness.raw()}, &output});
  }
  std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
    const auto& [sa, la, pa] = a.first;
    const auto& [sb, lb, pb] = b.first;
    if (sa != sb) return sa < sb;
    if (la != lb) return la < lb;
    return *pa < *pb;
  });
  std::vector<BitString> out;
  out.reserve(order.size());
  for (const auto& [key, output] : order) out.push_back(*output);
  return out;
}

std::vector<BitString> dovetail_first_appearance(std::uint32_t m, std::uint64_t step_cap,
                                                 const EnumerationOptions& options,
                                                 const MachineConfig& machine) {
  const auto table = build_run_table(machine, BitString(), m, step_cap, options);
  return first_appearance_order(table, m);
}

}  // namespace algstat
