#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "json.hpp"

#include "algstat/complexity.hpp"
#include "algstat/models.hpp"
#include "algstat/profile.hpp"

namespace algstat {

// h(k) = min{ log2 #S : x in S, C(S) <= k }, k = 0..L. Throws NoModel when
// no harvested model contains x at all.
Profile structure_function(const BitString& x, const std::vector<ModelRecord>& models,
                           const RunTable& plain_table);

// k + h(k) - C(x).
Profile normalized_structure_profile(const BitString& x, const std::vector<ModelRecord>& models,
                                     const RunTable& plain_table);

struct StochasticityProfile {
  Profile unclamped;  // min{ d(x|S) : x in S, C(S) <= k }
  Profile clamped;    // the same, floored at 0
};

StochasticityProfile stochasticity_profile(const BitString& x,
                                           const std::vector<ModelRecord>& models,
                                           const RunTable& plain_table,
                                           const ConditionalTables& cond_tables);

Profile bounded_profile(const BitString& x, const RunTable& plain_table);

struct RankPoint {
  std::uint32_t m = 0;
  std::uint64_t after = 0;  // strings appearing after x
  std::uint32_t s = 0;      // ceil(log2(after + 1))
  std::int64_t complexity_coord() const { return static_cast<std::int64_t>(m) - s; }

  bool operator==(const RankPoint&) const = default;
};

struct RankProfile {
  std::vector<RankPoint> points;
  std::vector<std::uint32_t> skipped;  // m where x never appears
};

// Uses the frontiers of `plain_table` (L >= m_hi) for the first-appearance
// order at each m.
RankProfile rank_profile(const BitString& x, std::uint32_t m_lo, std::uint32_t m_hi,
                         const RunTable& plain_table);

// Hausdorff distance under the L-infinity metric between the upper graphs
// {(k, v) : v >= P(k)}, k real in [0, k_max], P(k) = P(floor k). TOP entries
// count as max_len + 1. Throws ShapeMismatch on differing k_max.
double profile_distance(const Profile& p, const Profile& q);

// Largest distance from a point to the upper graph of q.
double points_to_upper_graph(std::span<const std::pair<double, double>> points, const Profile& q);

// Rank points moved into excess-over-C(x) coordinates, (m - s, m - C(x)), and
// measured against the normalized structure profile's upper graph.
double rank_distance(const RankProfile& rank, const Profile& normalized_structure,
                     std::uint32_t plain_complexity);

struct SufficientStatistic {
  std::uint32_t k_star = 0;
  ModelRecord witness;
};

// Least k with h(k) + k <= C(x) + slack. Throws NoSufficientStatistic.
SufficientStatistic minimal_sufficient_statistic(const BitString& x,
                                                 const std::vector<ModelRecord>& models,
                                                 const RunTable& plain_table, std::uint32_t slack);

// Koppel's c-sophistication: the same search, reported as the first-part length.
std::uint32_t sophistication(const BitString& x, const std::vector<ModelRecord>& models,
                             const RunTable& plain_table, std::uint32_t slack);

double shannon_entropy(double p);

struct BernoulliTwoPart {
  double log_count = 0;   // log2 binomial(n, m)
  double total_hint = 0;  // log_count + log2(n+1) + log2(m+1)
};

BernoulliTwoPart bernoulli_two_part(std::int64_t n, std::int64_t m);

struct CoincidenceSlack {
  double a = 0;
  double b = 0;

  double bound(std::size_t x_len) const;
};

CoincidenceSlack load_slack(const std::filesystem::path& golden);

struct CoincidenceReport {
  BitString x;
  double eps_sb = 0;  // structure vs bounded
  double eps_ss = 0;  // structure vs stochasticity
  double eps_bs = 0;  // bounded vs stochasticity
  CoincidenceSlack slack;
  bool pass = false;

  double max_epsilon() const;
  nlohmann::ordered_json to_json() const;
};

// Compares the normalized structure, unclamped stochasticity and bounded
// profiles. Throws ProvenanceMismatch unless all three share provenance.
CoincidenceReport coincidence_report(const BitString& x, const Profile& structure,
                                     const Profile& stochasticity, const Profile& bounded,
                                     const CoincidenceSlack& slack);

// The three curves of one string, ready for comparison. When no harvested
// model contains x the structure and stochasticity curves are all TOP.
struct ProfileSet {
  BitString x;
  std::uint32_t plain_complexity = 0;
  bool has_model = false;
  Profile structure_raw;
  Profile structure;  // normalized
  StochasticityProfile stochasticity;
  Profile bounded;
};

// Throws AbsentString if x has no program in the table.
ProfileSet compute_profiles(const BitString& x, const RunTable& plain_table,
                            const std::vector<ModelRecord>& models,
                            const ConditionalTables& cond_tables);

}  // namespace algstat
