#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "algstat/codec.hpp"
#include "algstat/enumerate.hpp"

namespace algstat {

// A finite set some program prints (canonically encoded) within the table's
// budgets, with that program's minimal length as its complexity.
struct ModelRecord {
  FiniteSetModel set;
  std::uint32_t complexity = 0;
  Program witness;

  BitString encoding() const { return encode_set(set); }
  bool operator==(const ModelRecord&) const = default;
};

struct DeficiencyPair {
  double d = 0;      // log2 #S - C(x | E(S))
  double delta = 0;  // C(S) + log2 #S - C(x)
  std::uint32_t conditional_used = 0;
  std::uint32_t plain_used = 0;
};

// Conditioned tables keyed by their condition bits, one per model.
using ConditionalTables = std::map<BitString, RunTable>;

// Every row of an unconditioned table whose output is a canonical set
// encoding with all elements of length <= max_elem_len. Sorted by
// complexity, then canonical set order.
std::vector<ModelRecord> harvest_models(const RunTable& plain_table, std::uint32_t max_elem_len);
std::vector<ModelRecord> harvest_models(std::uint32_t max_len, std::uint64_t step_cap,
                                        std::uint32_t max_elem_len,
                                        const EnumerationOptions& options = {},
                                        const MachineConfig& machine = {});

// One table per model, conditioned on E(S), at the plain table's budgets.
ConditionalTables build_conditional_tables(const std::vector<ModelRecord>& models,
                                           const RunTable& plain_table,
                                           const EnumerationOptions& options = {});

const RunTable& conditional_table_for(const ModelRecord& model, const ConditionalTables& tables);

// Both may be negative. Throw NotMember, ConditionMismatch or AbsentString.
double randomness_deficiency(const BitString& x, const ModelRecord& model, const RunTable& cond_table);
double optimality_deficiency(const BitString& x, const ModelRecord& model, const RunTable& plain_table);
DeficiencyPair deficiency_pair(const BitString& x, const ModelRecord& model,
                               const RunTable& plain_table, const RunTable& cond_table);

struct ScoredModel {
  double value = 0;
  ModelRecord model;
};

struct BestModels {
  ScoredModel min_d;
  ScoredModel min_delta;
};

// Argmins over {S : C(S) <= budget, x in S}; ties go to the smaller set,
// then canonical order. Throws NoModel when nothing qualifies.
BestModels best_models(const BitString& x, std::uint32_t budget,
                       const std::vector<ModelRecord>& models, const RunTable& plain_table,
                       const ConditionalTables& cond_tables);

}  // namespace algstat
