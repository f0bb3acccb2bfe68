#include "algstat/profiles.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <fstream>
#include <limits>

#include "algstat/error.hpp"
#include "algstat/serialize.hpp"

namespace algstat {

namespace {

Profile empty_profile(ProfileKind kind, const RunTable& table) {
  Profile p;
  p.kind = kind;
  p.provenance = provenance_of(table);
  p.values.resize(table.max_len + 1);
  return p;
}

std::uint32_t require_plain(const BitString& x, const RunTable& plain_table) {
  const auto c = plain_complexity(x, plain_table);
  if (c.infinite()) throw Error(ErrorKind::AbsentString, x.hexlen() + " has no program in the table");
  return c.value();
}

void require_model(const BitString& x, const std::vector<ModelRecord>& models) {
  if (std::none_of(models.begin(), models.end(),
                   [&](const ModelRecord& m) { return m.set.contains(x); })) {
    throw Error(ErrorKind::NoModel, "no harvested model contains " + x.hexlen());
  }
}

// The model realizing h(k): smallest set among those of complexity <= k that
// contain x, ties to canonical order.
const ModelRecord* h_minimizer(const BitString& x, const std::vector<ModelRecord>& models,
                               std::uint32_t k) {
  const ModelRecord* best = nullptr;
  for (const auto& m : models) {
    if (m.complexity > k || !m.set.contains(x)) continue;
    if (!best || m.set.cardinality() < best->set.cardinality() ||
        (m.set.cardinality() == best->set.cardinality() && m.set < best->set)) {
      best = &m;
    }
  }
  return best;
}

// Upper-graph geometry. Cell j of a profile covers [j, j+1) for j < k_max and
// the single point k_max for the last cell.
struct Cell {
  double lo;
  double hi;
};

Cell cell_of(std::size_t j, std::size_t k_max) {
  const double lo = static_cast<double>(j);
  return {lo, j < k_max ? lo + 1.0 : lo};
}

double interval_gap(double k, Cell c) {
  if (k < c.lo) return c.lo - k;
  if (k > c.hi) return k - c.hi;
  return 0.0;
}

// L-infinity distance from the point (k, v) to the upper graph of q.
double point_distance(double k, double v, const Profile& q) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j <= q.k_max(); ++j) {
    const double rise = std::max(0.0, q.at(j) - v);
    best = std::min(best, std::max(interval_gap(k, cell_of(j, q.k_max())), rise));
  }
  return best;
}

// sup over points of p's upper graph of the distance to q's upper graph. The
// sup over v >= p(k) sits at v = p(k); over k within a cell the distance is
// the lower envelope of functions with slopes -1, 0, +1, so its maximum is at
// a cell endpoint or at a crossing of two pieces.
double directed_distance(const Profile& p, const Profile& q) {
  const std::size_t n = q.k_max();
  double worst = 0.0;
  for (std::size_t i = 0; i <= p.k_max(); ++i) {
    const double level = p.at(i);
    const Cell ci = cell_of(i, p.k_max());
    std::vector<double> candidates{ci.lo, ci.hi, (ci.lo + ci.hi) / 2};
    std::vector<double> rises;
    for (std::size_t j = 0; j <= n; ++j) rises.push_back(std::max(0.0, q.at(j) - level));
    for (std::size_t j = 0; j <= n; ++j) {
      const Cell cj = cell_of(j, n);
      for (double r : rises) {
        candidates.push_back(cj.lo - r);
        candidates.push_back(cj.hi + r);
      }
    }
    for (double k : candidates) {
      if (k < ci.lo || k > ci.hi) continue;
      worst = std::max(worst, point_distance(k, level, q));
    }
  }
  return worst;
}

}  // namespace

Profile structure_function(const BitString& x, const std::vector<ModelRecord>& models,
                           const RunTable& plain_table) {
  require_model(x, models);
  Profile p = empty_profile(ProfileKind::Structure, plain_table);
  for (std::uint32_t k = 0; k <= plain_table.max_len; ++k) {
    if (const ModelRecord* m = h_minimizer(x, models, k)) p.values[k] = m->set.log_size();
  }
  return p;
}

Profile normalized_structure_profile(const BitString& x, const std::vector<ModelRecord>& models,
                                     const RunTable& plain_table) {
  const std::uint32_t cx = require_plain(x, plain_table);
  Profile p = structure_function(x, models, plain_table);
  for (std::size_t k = 0; k < p.values.size(); ++k) {
    if (p.values[k]) p.values[k] = static_cast<double>(k) + *p.values[k] - cx;
  }
  return p;
}

StochasticityProfile stochasticity_profile(const BitString& x,
                                           const std::vector<ModelRecord>& models,
                                           const RunTable& plain_table,
                                           const ConditionalTables& cond_tables) {
  require_model(x, models);
  StochasticityProfile out{empty_profile(ProfileKind::Stochasticity, plain_table),
                           empty_profile(ProfileKind::Stochasticity, plain_table)};
  for (const auto& m : models) {
    if (!m.set.contains(x) || m.complexity > plain_table.max_len) continue;
    const double d = randomness_deficiency(x, m, conditional_table_for(m, cond_tables));
    for (std::size_t k = m.complexity; k < out.unclamped.values.size(); ++k) {
      auto& v = out.unclamped.values[k];
      if (!v || d < *v) v = d;
    }
  }
  for (std::size_t k = 0; k < out.unclamped.values.size(); ++k) {
    if (out.unclamped.values[k]) out.clamped.values[k] = std::max(0.0, *out.unclamped.values[k]);
  }
  return out;
}

Profile bounded_profile(const BitString& x, const RunTable& plain_table) {
  return depth_profile(x, plain_table);
}

RankProfile rank_profile(const BitString& x, std::uint32_t m_lo, std::uint32_t m_hi,
                         const RunTable& plain_table) {
  RankProfile out;
  for (std::uint32_t m = m_lo; m <= m_hi; ++m) {
    const auto order = first_appearance_order(plain_table, m);
    const auto it = std::find(order.begin(), order.end(), x);
    if (it == order.end()) {
      out.skipped.push_back(m);
      continue;
    }
    const auto after = static_cast<std::uint64_t>(std::distance(it, order.end()) - 1);
    out.points.push_back({m, after, static_cast<std::uint32_t>(std::bit_width(after))});
  }
  return out;
}

double profile_distance(const Profile& p, const Profile& q) {
  if (p.k_max() != q.k_max() || p.values.empty() || q.values.empty()) {
    throw Error(ErrorKind::ShapeMismatch, "profiles cover different budget ranges");
  }
  return std::max(directed_distance(p, q), directed_distance(q, p));
}

double points_to_upper_graph(std::span<const std::pair<double, double>> points, const Profile& q) {
  double worst = 0.0;
  for (const auto& [k, v] : points) worst = std::max(worst, point_distance(k, v, q));
  return worst;
}

double rank_distance(const RankProfile& rank, const Profile& normalized_structure,
                     std::uint32_t plain_complexity) {
  std::vector<std::pair<double, double>> pts;
  for (const auto& pt : rank.points) {
    pts.emplace_back(static_cast<double>(pt.complexity_coord()),
                     static_cast<double>(pt.m) - plain_complexity);
  }
  return points_to_upper_graph(pts, normalized_structure);
}

SufficientStatistic minimal_sufficient_statistic(const BitString& x,
                                                 const std::vector<ModelRecord>& models,
                                                 const RunTable& plain_table, std::uint32_t slack) {
  const std::int64_t cx = require_plain(x, plain_table);
  for (std::uint32_t k = 0; k <= plain_table.max_len; ++k) {
    const ModelRecord* m = h_minimizer(x, models, k);
    if (!m) continue;
    // k + log2 #S <= C(x) + slack, decided on integers.
    const std::int64_t room = cx + slack - static_cast<std::int64_t>(k);
    if (room < 0) continue;
    if (room >= 63 || m->set.cardinality() <= (std::uint64_t{1} << room)) return {k, *m};
  }
  throw Error(ErrorKind::NoSufficientStatistic,
              "no budget satisfies h(k) + k <= C(x) + " + std::to_string(slack));
}

std::uint32_t sophistication(const BitString& x, const std::vector<ModelRecord>& models,
                             const RunTable& plain_table, std::uint32_t slack) {
  return minimal_sufficient_statistic(x, models, plain_table, slack).k_star;
}

double shannon_entropy(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw Error(ErrorKind::DomainError, "probability must lie in [0, 1]");
  }
  auto term = [](double q) { return q > 0.0 ? -q * std::log2(q) : 0.0; };
  return term(p) + term(1.0 - p);
}

BernoulliTwoPart bernoulli_two_part(std::int64_t n, std::int64_t m) {
  if (n < 0 || m < 0 || m > n) throw Error(ErrorKind::DomainError, "need 0 <= m <= n");
  const std::int64_t r = std::min(m, n - m);
  double log_count = 0.0;
  for (std::int64_t i = 1; i <= r; ++i) {
    log_count += std::log2(static_cast<double>(n - r + i) / static_cast<double>(i));
  }
  return {log_count, log_count + std::log2(static_cast<double>(n + 1)) +
                         std::log2(static_cast<double>(m + 1))};
}

double CoincidenceSlack::bound(std::size_t x_len) const {
  return a * std::log2(static_cast<double>(x_len) + 2.0) + b;
}

CoincidenceSlack load_slack(const std::filesystem::path& golden) {
  std::ifstream in(golden);
  if (!in) throw Error(ErrorKind::Io, "cannot read golden file " + golden.string());
  try {
    const auto j = nlohmann::json::parse(in);
    return {j.at("slack").at("a").get<double>(), j.at("slack").at("b").get<double>()};
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Io, "bad golden file " + golden.string() + ": " + e.what());
  }
}

double CoincidenceReport::max_epsilon() const { return std::max({eps_sb, eps_ss, eps_bs}); }

nlohmann::ordered_json CoincidenceReport::to_json() const {
  nlohmann::ordered_json j;
  j["x"] = algstat::to_json(x);
  j["epsilons"] = {{"sb", eps_sb}, {"ss", eps_ss}, {"bs", eps_bs}};
  j["slack"] = {{"a", slack.a}, {"b", slack.b}};
  j["pass"] = pass;
  return j;
}

CoincidenceReport coincidence_report(const BitString& x, const Profile& structure,
                                     const Profile& stochasticity, const Profile& bounded,
                                     const CoincidenceSlack& slack) {
  if (structure.provenance != stochasticity.provenance ||
      structure.provenance != bounded.provenance) {
    throw Error(ErrorKind::ProvenanceMismatch, "profiles were computed under different (L, T, machine)");
  }
  CoincidenceReport r;
  r.x = x;
  r.eps_sb = profile_distance(structure, bounded);
  r.eps_ss = profile_distance(structure, stochasticity);
  r.eps_bs = profile_distance(bounded, stochasticity);
  r.slack = slack;
  const double bound = slack.bound(x.size());
  r.pass = std::isfinite(r.max_epsilon()) && r.max_epsilon() <= bound;
  return r;
}

ProfileSet compute_profiles(const BitString& x, const RunTable& plain_table,
                            const std::vector<ModelRecord>& models,
                            const ConditionalTables& cond_tables) {
  ProfileSet s;
  s.x = x;
  s.plain_complexity = require_plain(x, plain_table);
  s.bounded = bounded_profile(x, plain_table);
  s.has_model = std::any_of(models.begin(), models.end(),
                            [&](const ModelRecord& m) { return m.set.contains(x); });
  if (s.has_model) {
    s.structure_raw = structure_function(x, models, plain_table);
    s.structure = normalized_structure_profile(x, models, plain_table);
    s.stochasticity = stochasticity_profile(x, models, plain_table, cond_tables);
  } else {
    s.structure_raw = empty_profile(ProfileKind::Structure, plain_table);
    s.structure = s.structure_raw;
    s.stochasticity = {empty_profile(ProfileKind::Stochasticity, plain_table),
                       empty_profile(ProfileKind::Stochasticity, plain_table)};
  }
  return s;
}

}  // namespace algstat
