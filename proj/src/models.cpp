#include "algstat/models.hpp"

#include <algorithm>

#include "algstat/complexity.hpp"
#include "algstat/error.hpp"

namespace algstat {

namespace {

void require_member(const BitString& x, const ModelRecord& model) {
  if (!model.set.contains(x)) {
    throw Error(ErrorKind::NotMember, x.hexlen() + " is not an element of the model");
  }
}

// Smaller value, then smaller set, then canonical set order.
bool better(double value, const ModelRecord& m, const ScoredModel& incumbent) {
  if (value != incumbent.value) return value < incumbent.value;
  if (m.set.cardinality() != incumbent.model.set.cardinality()) {
    return m.set.cardinality() < incumbent.model.set.cardinality();
  }
  return m.set < incumbent.model.set;
}

}  // namespace

std::vector<ModelRecord> harvest_models(const RunTable& plain_table, std::uint32_t max_elem_len) {
  if (!plain_table.condition.empty()) {
    throw Error(ErrorKind::ConditionMismatch, "models are harvested from the unconditioned table");
  }
  std::vector<ModelRecord> out;
  for (const auto& [output, row] : plain_table.rows) {
    auto decoded = try_decode_set(output);
    if (decoded.status != DecodeStatus::Ok) continue;
    const auto& elems = decoded.set->elements();
    if (std::any_of(elems.begin(), elems.end(),
                    [&](const BitString& w) { return w.size() > max_elem_len; })) {
      continue;
    }
    out.push_back({*std::move(decoded.set), row.min_len, row.witness});
  }
  std::sort(out.begin(), out.end(), [](const ModelRecord& a, const ModelRecord& b) {
    if (a.complexity != b.complexity) return a.complexity < b.complexity;
    return a.set < b.set;
  });
  return out;
}

std::vector<ModelRecord> harvest_models(std::uint32_t max_len, std::uint64_t step_cap,
                                        std::uint32_t max_elem_len,
                                        const EnumerationOptions& options,
                                        const MachineConfig& machine) {
  return harvest_models(build_run_table(machine, BitString(), max_len, step_cap, options),
                        max_elem_len);
}

ConditionalTables build_conditional_tables(const std::vector<ModelRecord>& models,
                                           const RunTable& plain_table,
                                           const EnumerationOptions& options) {
  ConditionalTables tables;
  for (const auto& m : models) {
    auto cond = m.encoding();
    if (tables.contains(cond)) continue;
    auto table = build_run_table(plain_table.machine, cond, plain_table.max_len,
                                 plain_table.step_cap, options);
    tables.emplace(std::move(cond), std::move(table));
  }
  return tables;
}

const RunTable& conditional_table_for(const ModelRecord& model, const ConditionalTables& tables) {
  auto it = tables.find(model.encoding());
  if (it == tables.end()) {
    throw Error(ErrorKind::ConditionMismatch, "no table conditioned on the model's encoding");
  }
  return it->second;
}

double randomness_deficiency(const BitString& x, const ModelRecord& model,
                             const RunTable& cond_table) {
  require_member(x, model);
  const auto c = conditional_complexity(x, model.encoding(), cond_table);
  if (c.infinite()) {
    throw Error(ErrorKind::AbsentString, x.hexlen() + " has no program given the model");
  }
  return model.set.log_size() - c.value();
}

double optimality_deficiency(const BitString& x, const ModelRecord& model,
                             const RunTable& plain_table) {
  require_member(x, model);
  const auto c = plain_complexity(x, plain_table);
  if (c.infinite()) throw Error(ErrorKind::AbsentString, x.hexlen() + " has no program");
  return static_cast<double>(model.complexity) + model.set.log_size() - c.value();
}

DeficiencyPair deficiency_pair(const BitString& x, const ModelRecord& model,
                               const RunTable& plain_table, const RunTable& cond_table) {
  DeficiencyPair p;
  p.d = randomness_deficiency(x, model, cond_table);
  p.delta = optimality_deficiency(x, model, plain_table);
  p.conditional_used = conditional_complexity(x, model.encoding(), cond_table).value();
  p.plain_used = plain_complexity(x, plain_table).value();
  return p;
}

BestModels best_models(const BitString& x, std::uint32_t budget,
                       const std::vector<ModelRecord>& models, const RunTable& plain_table,
                       const ConditionalTables& cond_tables) {
  std::optional<BestModels> best;
  for (const auto& m : models) {
    if (m.complexity > budget || !m.set.contains(x)) continue;
    const double d = randomness_deficiency(x, m, conditional_table_for(m, cond_tables));
    const double delta = optimality_deficiency(x, m, plain_table);
    if (!best) {
      best = BestModels{{d, m}, {delta, m}};
      continue;
    }
    if (better(d, m, best->min_d)) best->min_d = {d, m};
    if (better(delta, m, best->min_delta)) best->min_delta = {delta, m};
  }
  if (!best) {
    throw Error(ErrorKind::NoModel, "no model of complexity <= " + std::to_string(budget) +
                                        " contains " + x.hexlen());
  }
  return *std::move(best);
}

}  // namespace algstat
