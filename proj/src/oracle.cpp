#include "algstat/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "algstat/codec.hpp"
#include "algstat/error.hpp"

namespace algstat::oracle {

namespace {

void check_scale(std::uint32_t max_len) {
  if (max_len > kMaxLen) {
    throw Error(ErrorKind::OracleScaleExceeded,
                "oracle refuses L=" + std::to_string(max_len) + " (cap " +
                    std::to_string(kMaxLen) + ")");
  }
}

// All valid programs of raw length <= max_len, canonical order.
std::vector<Program> all_programs(std::uint32_t max_len) {
  std::vector<Program> out;
  for (std::uint32_t len = 0; len <= max_len; ++len) {
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << len); ++v) {
      if (auto p = parse_program(BitString::from_uint(v, len))) out.push_back(*p);
    }
  }
  return out;
}

struct Observation {
  std::uint32_t len;
  std::uint64_t steps;
  Program program;
};

Provenance provenance(std::uint32_t max_len, std::uint64_t step_cap) {
  return {max_len, step_cap, MachineConfig{}.version_tag};
}

Profile blank(ProfileKind kind, std::uint32_t max_len, std::uint64_t step_cap) {
  Profile p;
  p.kind = kind;
  p.provenance = provenance(max_len, step_cap);
  p.values.resize(max_len + 1);
  return p;
}

}  // namespace

RunTable run_table(const BitString& condition, std::uint32_t max_len, std::uint64_t step_cap) {
  check_scale(max_len);
  std::map<BitString, std::vector<Observation>> seen;
  std::vector<std::pair<std::uint32_t, std::uint64_t>> halts;  // (len, steps)
  for (const Program& p : all_programs(max_len)) {
    const ExecOutcome r = execute(p, condition, step_cap);
    if (r.status != ExecStatus::Halted) continue;
    const auto len = static_cast<std::uint32_t>(p.length());
    halts.emplace_back(len, r.steps);
    seen[r.output].push_back({len, r.steps, p});
  }

  RunTable table;
  table.condition = condition;
  table.max_len = max_len;
  table.step_cap = step_cap;
  for (const auto& [output, obs] : seen) {
    RunRow row;
    // obs is in canonical program order, so the first entry is shortest and
    // lexicographically smallest.
    row.min_len = obs.front().len;
    row.witness = obs.front().program;
    row.min_steps = obs.front().steps;
    for (const auto& o : obs) {
      if (o.len == row.min_len) row.min_steps = std::min(row.min_steps, o.steps);
    }
    // Candidate point per length: fewest steps and the first program reaching it.
    std::map<std::uint32_t, const Observation*> per_len;
    for (const auto& o : obs) {
      auto& slot = per_len[o.len];
      if (!slot || o.steps < slot->steps) slot = &o;
    }
    for (const auto& [len, o] : per_len) {
      bool dominated = false;
      for (const auto& [len2, o2] : per_len) {
        if (len2 <= len && o2->steps <= o->steps && (len2 != len || o2->steps != o->steps)) {
          dominated = true;
        }
      }
      if (!dominated) row.frontier.push_back({len, o->steps, o->program});
    }
    table.rows.emplace(output, std::move(row));
  }
  table.bb_by_len.assign(max_len + 1, 0);
  for (std::uint32_t k = 0; k <= max_len; ++k) {
    for (const auto& [len, steps] : halts) {
      if (len <= k) table.bb_by_len[k] = std::max(table.bb_by_len[k], steps);
    }
  }
  return table;
}

std::optional<std::uint32_t> time_bounded_complexity(const BitString& x, std::uint32_t max_len,
                                                     std::uint64_t t) {
  check_scale(max_len);
  for (const Program& p : all_programs(max_len)) {
    const ExecOutcome r = execute(p, BitString(), t);
    if (r.status == ExecStatus::Halted && r.output == x) {
      return static_cast<std::uint32_t>(p.length());
    }
  }
  return std::nullopt;
}

std::uint64_t busy_beaver(std::uint32_t k, std::uint64_t step_cap) {
  check_scale(k);
  std::uint64_t best = 0;
  for (const Program& p : all_programs(k)) {
    const ExecOutcome r = execute(p, BitString(), step_cap);
    if (r.status == ExecStatus::Halted) best = std::max(best, r.steps);
  }
  return best;
}

std::vector<ModelRecord> models(std::uint32_t max_len, std::uint64_t step_cap,
                                std::uint32_t max_elem_len) {
  const RunTable table = run_table(BitString(), max_len, step_cap);
  std::vector<ModelRecord> out;
  for (const auto& [output, row] : table.rows) {
    FiniteSetModel set;
    try {
      set = decode_set(output);
    } catch (const Error&) {
      continue;
    }
    bool fits = true;
    for (const auto& w : set.elements()) fits = fits && w.size() <= max_elem_len;
    if (fits) out.push_back({set, row.min_len, row.witness});
  }
  std::sort(out.begin(), out.end(), [](const ModelRecord& a, const ModelRecord& b) {
    return a.complexity != b.complexity ? a.complexity < b.complexity : a.set < b.set;
  });
  return out;
}

std::vector<BitString> first_appearance(std::uint32_t m, std::uint64_t step_cap) {
  check_scale(m);
  const std::vector<Program> programs = all_programs(m);
  const BitString no_input;
  std::vector<Interpreter> live;
  live.reserve(programs.size());
  for (const Program& p : programs) live.emplace_back(p, no_input);

  std::vector<BitString> order;
  std::set<BitString> appeared;
  auto note = [&](const Interpreter& it) {
    if (appeared.insert(it.output()).second) order.push_back(it.output());
  };
  std::vector<bool> done(live.size(), false);
  for (std::size_t i = 0; i < live.size(); ++i) {
    if (live[i].halted()) {
      note(live[i]);
      done[i] = true;
    }
  }
  for (std::uint64_t round = 1; round <= step_cap; ++round) {
    bool any = false;
    for (std::size_t i = 0; i < live.size(); ++i) {
      if (done[i]) continue;
      live[i].step();
      if (live[i].halted()) {
        note(live[i]);
        done[i] = true;
      } else {
        any = true;
      }
    }
    if (!any) break;
  }
  return order;
}

RankProfile rank_profile(const BitString& x, std::uint32_t m_lo, std::uint32_t m_hi,
                         std::uint64_t step_cap) {
  RankProfile out;
  for (std::uint32_t m = m_lo; m <= m_hi; ++m) {
    const auto order = first_appearance(m, step_cap);
    std::optional<std::size_t> pos;
    for (std::size_t i = 0; i < order.size(); ++i) {
      if (order[i] == x) pos = i;
    }
    if (!pos) {
      out.skipped.push_back(m);
      continue;
    }
    const std::uint64_t after = order.size() - 1 - *pos;
    std::uint32_t s = 0;
    while ((std::uint64_t{1} << s) < after + 1) ++s;
    out.points.push_back({m, after, s});
  }
  return out;
}

Profiles profiles(const BitString& x, std::uint32_t max_len, std::uint64_t step_cap,
                  std::uint32_t max_elem_len) {
  Profiles out;
  const RunTable table = run_table(BitString(), max_len, step_cap);
  const RunRow* row = table.find(x);
  if (!row) return out;
  out.present = true;
  const double cx = row->min_len;

  out.bounded = blank(ProfileKind::Bounded, max_len, step_cap);
  for (std::uint32_t k = 0; k <= max_len; ++k) {
    const auto kt = time_bounded_complexity(x, max_len, busy_beaver(k, step_cap));
    if (kt) out.bounded.values[k] = *kt - cx;
  }

  out.structure_raw = blank(ProfileKind::Structure, max_len, step_cap);
  out.structure = blank(ProfileKind::Structure, max_len, step_cap);
  out.stochasticity = blank(ProfileKind::Stochasticity, max_len, step_cap);
  out.stochasticity_clamped = blank(ProfileKind::Stochasticity, max_len, step_cap);

  std::vector<std::pair<ModelRecord, double>> containing;  // model, d(x|S)
  for (const auto& m : models(max_len, step_cap, max_elem_len)) {
    if (!m.set.contains(x)) continue;
    const RunTable cond = run_table(encode_set(m.set), max_len, step_cap);
    const RunRow* crow = cond.find(x);
    if (!crow) throw Error(ErrorKind::AbsentString, "no conditional program for x");
    containing.emplace_back(m, std::log2(static_cast<double>(m.set.cardinality())) - crow->min_len);
  }
  out.has_model = !containing.empty();

  for (std::uint32_t k = 0; k <= max_len; ++k) {
    std::optional<double> h;
    std::optional<double> d;
    for (const auto& [m, dm] : containing) {
      if (m.complexity > k) continue;
      const double logsize = std::log2(static_cast<double>(m.set.cardinality()));
      if (!h || logsize < *h) h = logsize;
      if (!d || dm < *d) d = dm;
    }
    out.structure_raw.values[k] = h;
    if (h) out.structure.values[k] = k + *h - cx;
    out.stochasticity.values[k] = d;
    if (d) out.stochasticity_clamped.values[k] = std::max(0.0, *d);
  }
  return out;
}

}  // namespace algstat::oracle
