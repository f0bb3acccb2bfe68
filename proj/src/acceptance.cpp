#include "algstat/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "algstat/complexity.hpp"
#include "algstat/error.hpp"
#include "algstat/models.hpp"
#include "algstat/oracle.hpp"
#include "algstat/profiles.hpp"
#include "algstat/serialize.hpp"

namespace algstat::acceptance {

namespace fs = std::filesystem;

namespace {

// Budgets per scale. Full uses the sizes each criterion names; smoke keeps
// every table at L <= 10.
struct Plan {
  std::uint32_t oracle_len;
  std::uint32_t print_len;
  std::uint32_t ref_len;
  std::uint64_t ref_cap;
  std::uint32_t word_len;
  std::vector<std::uint32_t> algebra_lens;
};

Plan plan_for(Scale s) {
  if (s == Scale::Smoke) return {9, 10, 10, 256, 4, {10}};
  return {12, 16, 18, 1024, 6, {14, 18, 24}};
}

std::vector<BitString> words_up_to(std::uint32_t n) {
  std::vector<BitString> out;
  for (std::uint32_t len = 0; len <= n; ++len) {
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << len); ++v) out.push_back(BitString::from_uint(v, len));
  }
  return out;
}

// Collects failures and artifact text for one criterion.
class Check {
 public:
  void fail(const std::string& what) {
    if (failures_++ < 3) first_ += (first_.empty() ? "" : "; ") + what;
  }
  void expect(bool ok, const std::string& what) {
    if (!ok) fail(what);
  }
  bool ok() const { return failures_ == 0; }
  std::string summary(const std::string& detail) const {
    if (ok()) return detail;
    return std::to_string(failures_) + " failure(s): " + first_ + (detail.empty() ? "" : " | " + detail);
  }
  std::ostringstream art;

 private:
  std::size_t failures_ = 0;
  std::string first_;
};

struct Context {
  const Options& options;
  Plan plan;
  EnumerationOptions enum_opts;
  fs::path dir;
};

void write_artifact(const Context& ctx, const std::string& name, const std::string& text) {
  std::ofstream out(ctx.dir / name, std::ios::binary | std::ios::trunc);
  out << text;
  if (!out) throw Error(ErrorKind::Io, "cannot write artifact " + (ctx.dir / name).string());
}

std::string word(const BitString& x) { return x.hexlen(); }

std::string values_text(const Profile& p) {
  std::string s;
  for (std::size_t k = 0; k < p.values.size(); ++k) {
    if (k) s += ' ';
    s += p.is_top(k) ? "TOP" : format_real(*p.values[k]);
  }
  return s;
}

bool non_increasing(const Profile& p) {
  for (std::size_t k = 1; k < p.values.size(); ++k) {
    if (p.at(k) > p.at(k - 1)) return false;
  }
  return true;
}

struct World {
  RunTable plain;
  std::vector<ModelRecord> models;
  ConditionalTables cond;
};

World build_world(std::uint32_t L, std::uint64_t T, std::uint32_t max_elem, const EnumerationOptions& e) {
  World w{build_run_table({}, {}, L, T, e), {}, {}};
  w.models = harvest_models(w.plain, max_elem);
  w.cond = build_conditional_tables(w.models, w.plain, e);
  return w;
}

std::string table_text(const RunTable& t) {
  std::ostringstream os;
  os << "L=" << t.max_len << " T=" << t.step_cap << " condition=" << word(t.condition)
     << " rows=" << t.rows.size() << "\n";
  for (const auto& [x, row] : t.rows) {
    os << word(x) << " len=" << row.min_len << " steps=" << row.min_steps
       << " witness=" << word(row.witness.raw()) << " frontier=" << row.frontier.size() << "\n";
  }
  os << "bb";
  for (auto b : t.bb_by_len) os << ' ' << b;
  os << "\n";
  return os.str();
}

std::string models_text(const std::vector<ModelRecord>& models) {
  std::ostringstream os;
  os << "models=" << models.size() << "\n";
  for (const auto& m : models) {
    os << word(m.encoding()) << " C=" << m.complexity << " witness=" << word(m.witness.raw()) << "\n";
  }
  return os.str();
}

// 1. Pipeline and oracle agree on tables, models and profiles.
Criterion oracle_equivalence(const Context& ctx) {
  Check c;
  const std::uint32_t L = ctx.plan.oracle_len;
  const std::uint64_t T = 256;
  const std::uint32_t max_elem = 6;
  const std::vector<BitString> conditions{
      {}, encode_element(BitString::from_bits("0")),
      encode_set(canonicalize(std::vector{BitString::from_bits("0"), BitString::from_bits("1")}))};
  for (const auto& cond : conditions) {
    const auto got = build_run_table({}, cond, L, T, ctx.enum_opts);
    c.expect(got == oracle::run_table(cond, L, T), "table differs for condition " + word(cond));
    c.art << table_text(got);
  }
  const World w = build_world(L, T, max_elem, ctx.enum_opts);
  c.expect(w.models == oracle::models(L, T, max_elem), "model list differs");
  c.art << models_text(w.models);
  std::size_t present = 0;
  const auto xs = words_up_to(4);
  for (const auto& x : xs) {
    const auto want = oracle::profiles(x, L, T, max_elem);
    if (!w.plain.find(x)) {
      c.expect(!want.present, "oracle has a program for " + word(x));
      c.art << word(x) << " absent\n";
      continue;
    }
    ++present;
    const auto got = compute_profiles(x, w.plain, w.models, w.cond);
    const bool same = want.present && got.has_model == want.has_model &&
                      got.structure_raw == want.structure_raw && got.structure == want.structure &&
                      got.stochasticity.unclamped == want.stochasticity &&
                      got.stochasticity.clamped == want.stochasticity_clamped &&
                      got.bounded == want.bounded;
    c.expect(same, "profiles differ for " + word(x));
    c.art << word(x) << " structure " << values_text(got.structure) << "\n"
          << word(x) << " stochasticity " << values_text(got.stochasticity.unclamped) << "\n"
          << word(x) << " bounded " << values_text(got.bounded) << "\n";
  }
  write_artifact(ctx, "c1_oracle_equivalence.txt", c.art.str());
  return {1, "oracle-equivalence", c.ok(),
          c.summary("L=" + std::to_string(L) + " T=256, 3 conditions, " + std::to_string(w.models.size()) +
                    " models, " + std::to_string(present) + "/" + std::to_string(xs.size()) +
                    " strings of length <= 4 present")};
}

// 2. Values derivable by hand from the opcode table.
Criterion vm_anchors(const Context& ctx) {
  Check c;
  const auto t = build_run_table({}, {}, 6, 256, ctx.enum_opts);
  auto row_is = [&](const char* x, std::uint32_t len, const char* witness) {
    const RunRow* r = t.find(BitString::from_bits(x));
    const bool ok = r && r->min_len == len && r->witness.raw() == BitString::from_bits(witness);
    c.expect(ok, std::string("C(\"") + x + "\")");
    c.art << "C(" << x << ")=" << (r ? std::to_string(r->min_len) : "inf") << " witness "
          << (r ? r->witness.raw().str() : "-") << "\n";
  };
  row_is("", 0, "");
  row_is("0", 3, "011");
  row_is("1", 6, "010011");
  const std::vector<std::pair<std::uint32_t, std::uint64_t>> bb{{0, 0}, {2, 0}, {3, 1}};
  for (auto [k, want] : bb) {
    const auto got = busy_beaver_bound(k, t);
    c.expect(got == want, "B(" + std::to_string(k) + ")");
    c.art << "B(" << k << ")=" << got << "\n";
  }
  write_artifact(ctx, "c2_vm_anchors.txt", c.art.str());
  return {2, "vm-anchors", c.ok(), c.summary("C(e)=0 C(0)=3 C(1)=6, B(0)=B(2)=0 B(3)=1")};
}

// 3. The flip-and-emit printer stays within 6 len + 1 steps.
Criterion print_bound(const Context& ctx) {
  Check c;
  std::uint64_t count = 0;
  std::uint64_t worst_slack = ~std::uint64_t{0};
  for (std::uint32_t len = 1; len <= ctx.plan.print_len; ++len) {
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << len); ++v) {
      const auto x = BitString::from_uint(v, len);
      const std::uint64_t cap = 6 * std::uint64_t{len} + 1;
      const auto r = execute(print_program(x), {}, cap);
      const bool ok = r.status == ExecStatus::Halted && r.output == x;
      c.expect(ok, "printer fails on " + word(x));
      if (ok) worst_slack = std::min(worst_slack, cap - r.steps);
      ++count;
    }
  }
  c.art << "strings=" << count << " min_spare_steps=" << worst_slack << "\n";
  write_artifact(ctx, "c3_print_bound.txt", c.art.str());
  return {3, "print-bound", c.ok(),
          c.summary(std::to_string(count) + " strings of length 1.." + std::to_string(ctx.plan.print_len))};
}

// 4. Monotonicity and dominance over every short string.
Criterion monotonicity(const Context& ctx, const World& w) {
  Check c;
  const std::uint32_t L = w.plain.max_len;
  const std::uint64_t T = w.plain.step_cap;
  std::size_t present = 0;
  std::size_t with_model = 0;
  const auto xs = words_up_to(ctx.plan.word_len);
  for (const auto& x : xs) {
    const std::string name = word(x);
    std::optional<std::uint32_t> prev;
    bool kt_ok = true;
    for (std::uint64_t t = 0; t <= T; ++t) {
      const auto kt = time_bounded_complexity(x, t, w.plain);
      if (prev && (kt.infinite() || kt.value() > *prev)) kt_ok = false;
      if (!kt.infinite()) prev = kt.value();
    }
    c.expect(kt_ok, "K^t increases for " + name);
    const RunRow* row = w.plain.find(x);
    if (!row) {
      c.expect(!prev, "K^t finite for absent " + name);
      c.art << name << " absent K^T=inf\n";
      continue;
    }
    ++present;
    c.expect(prev == row->min_len, "K^T differs from C for " + name);
    const auto s = compute_profiles(x, w.plain, w.models, w.cond);
    if (s.has_model) ++with_model;
    c.expect(non_increasing(s.structure_raw), "structure increases for " + name);
    c.expect(non_increasing(s.stochasticity.unclamped), "stochasticity increases for " + name);
    c.expect(non_increasing(s.bounded), "bounded increases for " + name);
    for (std::uint32_t k = 0; k <= L; ++k) {
      if (!s.structure_raw.is_top(k) && !s.stochasticity.unclamped.is_top(k)) {
        c.expect(*s.stochasticity.unclamped.values[k] <= *s.structure_raw.values[k],
                 "stochasticity above structure for " + name);
      }
      if (k >= s.plain_complexity) c.expect(s.bounded.values[k] == 0.0, "bounded nonzero for " + name);
    }
    // Normalized structure: running minimum equals the least optimality
    // deficiency within budget, and at C({x}) it is delta(x | {x}).
    std::optional<double> run;
    for (std::uint32_t k = 0; k <= L && s.has_model; ++k) {
      if (s.structure_raw.is_top(k)) continue;
      const double v = k + *s.structure_raw.values[k] - s.plain_complexity;
      run = run ? std::min(*run, v) : v;
      const auto best = best_models(x, k, w.models, w.plain, w.cond);
      c.expect(*run == best.min_delta.value, "structure/delta mismatch for " + name);
    }
    for (const auto& m : w.models) {
      if (m.set.cardinality() == 1 && m.set.contains(x)) {
        c.expect(s.structure.values[m.complexity] ==
                     optimality_deficiency(x, m, w.plain),
                 "endpoint mismatch for " + name);
      }
    }
    c.art << name << " C=" << s.plain_complexity << " bounded " << values_text(s.bounded) << "\n";
  }
  write_artifact(ctx, "c4_monotonicity.txt", c.art.str());
  return {4, "monotonicity", c.ok(),
          c.summary("L=" + std::to_string(L) + " T=" + std::to_string(T) + ", " + std::to_string(present) +
                    "/" + std::to_string(xs.size()) + " strings present, " + std::to_string(with_model) +
                    " with a model")};
}

// 5. delta - d = C(S) + C(x|E(S)) - C(x) and d <= log2 #S.
Criterion deficiency_algebra(const Context& ctx, const World* reference) {
  Check c;
  std::string detail;
  for (std::uint32_t L : ctx.plan.algebra_lens) {
    const std::uint64_t T = 256;
    const World w = (reference && reference->plain.max_len == L && reference->plain.step_cap == T)
                        ? *reference
                        : build_world(L, T, L, ctx.enum_opts);
    std::size_t pairs = 0;
    for (const auto& m : w.models) {
      const RunTable& cond = conditional_table_for(m, w.cond);
      for (const auto& x : m.set.elements()) {
        const auto p = deficiency_pair(x, m, w.plain, cond);
        const double rhs = static_cast<double>(m.complexity) + p.conditional_used - p.plain_used;
        c.expect(std::abs((p.delta - p.d) - rhs) <= 1e-12, "identity fails for " + word(x));
        c.expect(p.d <= m.set.log_size() + 1e-12, "d above log2 #S for " + word(x));
        c.art << "L=" << L << " S=" << word(m.encoding()) << " x=" << word(x) << " d=" << format_real(p.d)
              << " delta=" << format_real(p.delta) << "\n";
        ++pairs;
      }
    }
    detail += (detail.empty() ? "" : ", ") + std::to_string(pairs) + " pairs at L=" + std::to_string(L);
  }
  write_artifact(ctx, "c5_deficiency_algebra.txt", c.art.str());
  return {5, "deficiency-algebra", c.ok(), c.summary(detail)};
}

// 6. Closed-form reference values.
Criterion analytic(const Context& ctx) {
  Check c;
  const double h3 = shannon_entropy(1.0 / 3.0);
  const double h2 = shannon_entropy(0.5);
  const double b42 = bernoulli_two_part(4, 2).log_count;
  c.expect(std::abs(h3 - 0.9182958280) <= 1e-8, "H(1/3)");
  c.expect(h2 == 1.0, "H(1/2)");
  c.expect(std::abs(b42 - std::log2(6.0)) <= 1e-12, "log2 binom(4,2)");
  c.art << "H(1/3)=" << format_real(h3) << "\nH(1/2)=" << format_real(h2) << "\nlog2C(4,2)="
        << format_real(b42) << "\n";
  write_artifact(ctx, "c6_analytic.txt", c.art.str());
  return {6, "analytic", c.ok(), c.summary("H(1/3)=" + format_real(h3))};
}

// 7. Pairwise profile distances within the pinned slack.
Criterion coincidence(const Context& ctx, const World& w, const CoincidenceSlack& slack) {
  Check c;
  std::size_t present = 0;
  std::size_t absent = 0;
  double worst_ratio = 0;
  const auto xs = words_up_to(ctx.plan.word_len);
  for (const auto& x : xs) {
    if (!w.plain.find(x)) {
      ++absent;
      c.fail("no program for " + word(x) + " within (L, T)");
      c.art << word(x) << " absent\n";
      continue;
    }
    ++present;
    const auto s = compute_profiles(x, w.plain, w.models, w.cond);
    const auto r = coincidence_report(x, s.structure, s.stochasticity.unclamped, s.bounded, slack);
    c.expect(r.pass, "epsilon above bound for " + word(x));
    const double bound = slack.bound(x.size());
    if (bound > 0) worst_ratio = std::max(worst_ratio, r.max_epsilon() / bound);
    c.art << r.to_json().dump() << "\n";
  }
  write_artifact(ctx, "c7_coincidence.jsonl", c.art.str());
  std::ostringstream detail;
  detail << present << "/" << xs.size() << " strings present, " << absent
         << " without any program; worst eps/bound=" << format_real(worst_ratio) << " (a=" << format_real(slack.a)
         << " b=" << format_real(slack.b) << ")";
  return {7, "coincidence", c.ok(), c.summary(detail.str())};
}

// 8. Rank points within the same slack of the normalized structure curve.
Criterion rank_consistency(const Context& ctx, const World& w, const CoincidenceSlack& slack) {
  Check c;
  std::size_t points = 0;
  std::size_t with_points = 0;
  const auto xs = words_up_to(ctx.plan.word_len);
  for (const auto& x : xs) {
    if (!w.plain.find(x)) {
      c.art << word(x) << " absent, no rank points\n";
      continue;
    }
    const auto s = compute_profiles(x, w.plain, w.models, w.cond);
    const auto rank = rank_profile(x, 0, w.plain.max_len, w.plain);
    const double dist = rank_distance(rank, s.structure, s.plain_complexity);
    c.expect(dist <= slack.bound(x.size()), "rank points too far for " + word(x));
    points += rank.points.size();
    if (!rank.points.empty()) ++with_points;
    c.art << word(x) << " dist=" << format_real(dist);
    for (const auto& p : rank.points) c.art << " (" << p.m << "," << p.after << "," << p.s << ")";
    c.art << "\n";
  }
  write_artifact(ctx, "c8_rank.txt", c.art.str());
  return {8, "rank-consistency", c.ok(),
          c.summary(std::to_string(points) + " points from " + std::to_string(with_points) + "/" +
                    std::to_string(xs.size()) + " strings")};
}

template <class F>
Criterion timed(F&& f) {
  const auto start = std::chrono::steady_clock::now();
  Criterion c;
  try {
    c = f();
  } catch (const std::exception& e) {
    c.pass = false;
    c.detail = std::string("error: ") + e.what();
  }
  c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return c;
}

std::vector<Criterion> run_one_to_eight(const Context& ctx) {
  std::vector<Criterion> out;
  out.push_back(timed([&] { return oracle_equivalence(ctx); }));
  out.push_back(timed([&] { return vm_anchors(ctx); }));
  out.push_back(timed([&] { return print_bound(ctx); }));

  std::optional<World> ref;
  const auto build = timed([&] {
    ref = build_world(ctx.plan.ref_len, ctx.plan.ref_cap, ctx.plan.word_len, ctx.enum_opts);
    return Criterion{};
  });
  auto with_ref = [&](int id, const char* name, auto&& f) {
    if (!ref) return Criterion{id, name, false, "reference tables failed: " + build.detail, 0};
    return timed([&] { return f(*ref); });
  };
  out.push_back(with_ref(4, "monotonicity", [&](const World& w) { return monotonicity(ctx, w); }));
  out.push_back(timed([&] { return deficiency_algebra(ctx, ref ? &*ref : nullptr); }));
  out.push_back(timed([&] { return analytic(ctx); }));

  std::optional<CoincidenceSlack> slack;
  std::string slack_error;
  try {
    slack = load_slack(ctx.options.golden);
  } catch (const std::exception& e) {
    slack_error = e.what();
  }
  auto with_slack = [&](int id, const char* name, auto&& f) {
    if (!slack) return Criterion{id, name, false, "golden slack unavailable: " + slack_error, 0};
    return with_ref(id, name, [&](const World& w) { return f(w, *slack); });
  };
  out.push_back(with_slack(7, "coincidence",
                           [&](const World& w, const CoincidenceSlack& s) { return coincidence(ctx, w, s); }));
  out.push_back(with_slack(8, "rank-consistency", [&](const World& w, const CoincidenceSlack& s) {
    return rank_consistency(ctx, w, s);
  }));
  return out;
}

std::map<std::string, std::string> read_dir(const fs::path& dir) {
  std::map<std::string, std::string> files;
  for (const auto& e : fs::directory_iterator(dir)) {
    std::ifstream in(e.path(), std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    files[e.path().filename().string()] = ss.str();
  }
  return files;
}

fs::path scratch_dir(const std::string& tag) {
  static int counter = 0;
  const fs::path p = fs::temp_directory_path() /
                     ("algstat_accept_" + std::to_string(::getpid()) + "_" + tag + "_" + std::to_string(counter++));
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

Context make_context(const Options& o, const fs::path& dir, unsigned workers) {
  return {o, plan_for(o.scale), EnumerationOptions{workers}, dir};
}

}  // namespace

std::vector<Criterion> run(const Options& options) {
  const bool scratch = options.artifact_dir.empty();
  const fs::path dir = scratch ? scratch_dir("main") : options.artifact_dir;
  fs::create_directories(dir);
  auto results = run_one_to_eight(make_context(options, dir, options.workers));

  if (options.determinism) {
    results.push_back(timed([&] {
      Check c;
      const auto main_files = read_dir(dir);
      std::string detail = std::to_string(main_files.size()) + " artifact files";
      for (unsigned workers : {1U, 8U}) {
        const fs::path other = scratch_dir("w" + std::to_string(workers));
        run_one_to_eight(make_context(options, other, workers));
        const auto files = read_dir(other);
        fs::remove_all(other);
        for (const auto& [name, bytes] : main_files) {
          const auto it = files.find(name);
          c.expect(it != files.end() && it->second == bytes,
                   name + " differs with " + std::to_string(workers) + " worker(s)");
        }
        c.expect(files.size() == main_files.size(), "artifact set differs");
      }
      return Criterion{9, "determinism", c.ok(), c.summary(detail + " identical across runs with 1 and 8 workers")};
    }));
  }
  if (scratch) fs::remove_all(dir);
  return results;
}

std::string format_line(const Criterion& c) {
  std::ostringstream os;
  os << (c.pass ? "PASS" : "FAIL") << "  " << c.id << " " << c.name << "  " << c.detail << "  (";
  os.setf(std::ios::fixed);
  os.precision(1);
  os << c.seconds << " s)";
  return os.str();
}

nlohmann::ordered_json report_json(const std::vector<Criterion>& results, const Options& options) {
  nlohmann::ordered_json j;
  j["scale"] = options.scale == Scale::Smoke ? "smoke" : "full";
  j["machine"] = MachineConfig{}.version_tag;
  j["golden"] = options.golden.string();
  j["pass"] = std::all_of(results.begin(), results.end(), [](const Criterion& c) { return c.pass; });
  auto& arr = j["criteria"] = nlohmann::ordered_json::array();
  for (const auto& c : results) {
    arr.push_back({{"id", c.id}, {"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  }
  return j;
}

}  // namespace algstat::acceptance
