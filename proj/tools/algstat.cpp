// algstat: build run tables, compute profiles, run the acceptance suite.
//
// Exit codes: 0 ok, 1 other error, 2 usage, 3 resource budget, 4 io,
// 5 verification failure or string without a program.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "algstat/acceptance.hpp"
#include "algstat/error.hpp"
#include "algstat/profiles.hpp"
#include "algstat/serialize.hpp"

using namespace algstat;
namespace fs = std::filesystem;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;
constexpr int kExitIo = 4;
constexpr int kExitFail = 5;

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Usage:
    case ErrorKind::DomainError:
    case ErrorKind::MalformedEncoding:
    case ErrorKind::NonCanonical:
    case ErrorKind::OutOfRange:
      return kExitUsage;
    case ErrorKind::ResourceBudget:
    case ErrorKind::OracleScaleExceeded:
      return kExitBudget;
    case ErrorKind::Io:
    case ErrorKind::CacheCorrupt:
    case ErrorKind::CacheMiss:
    case ErrorKind::KeyMismatch:
      return kExitIo;
    case ErrorKind::AbsentString:
      return kExitFail;
    default:
      return 1;
  }
}

fs::path default_cache_dir() {
  const char* env = std::getenv("ALGSTAT_CACHE_DIR");
  return env && *env ? fs::path(env) : fs::path("algstat-cache");
}

struct Budget {
  std::uint32_t L = 18;
  std::uint64_t T = 1024;
  unsigned workers = 0;
  std::string cache;
};

void add_budget(CLI::App* cmd, Budget& b) {
  cmd->add_option("--L", b.L, "maximum program length in bits")->capture_default_str();
  cmd->add_option("--T", b.T, "step cap")->capture_default_str();
  cmd->add_option("--workers", b.workers, "threads (0: all cores)");
  cmd->add_option("--cache", b.cache, "cache directory (default $ALGSTAT_CACHE_DIR or ./algstat-cache)");
}

// Loads the table from the cache directory or builds and stores it. Stale or
// damaged cache files are rebuilt.
RunTable load_or_build(const BitString& condition, const Budget& b, bool& hit) {
  const MachineConfig machine;
  check_enumeration_budget(b.L, kDefaultEnumerationCeiling);
  const fs::path dir = b.cache.empty() ? default_cache_dir() : fs::path(b.cache);
  const fs::path path = dir / cache_file_name(machine, condition, b.L, b.T);
  hit = false;
  try {
    auto t = cache_load(machine, condition, b.L, b.T, path);
    hit = true;
    return t;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::CacheMiss) std::cerr << "rebuilding cache: " << e.what() << "\n";
  }
  auto t = build_run_table(machine, condition, b.L, b.T, {b.workers});
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw Error(ErrorKind::Io, "cannot create cache directory " + dir.string());
  cache_store(t, path);
  return t;
}

void write_file(const fs::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  out << text;
  if (!out) throw Error(ErrorKind::Io, "cannot write " + p.string());
}

int cmd_table(const std::string& condition_text, const Budget& b) {
  const BitString condition = BitString::from_hexlen(condition_text);
  bool hit = false;
  const auto t = load_or_build(condition, b, hit);
  if (hit) std::cout << "cache hit\n";
  std::cout << "rows=" << t.rows.size() << "\n";
  std::cout << "bb_by_len=";
  for (std::size_t k = 0; k < t.bb_by_len.size(); ++k) std::cout << (k ? " " : "") << t.bb_by_len[k];
  std::cout << "\n";
  return 0;
}

struct ProfilesArgs {
  std::string x;
  bool rank = false;
  std::string out = ".";
  std::string golden = "golden/coincidence.json";
};

int cmd_profiles(const ProfilesArgs& a, const Budget& b) {
  const BitString x = BitString::from_hexlen(a.x);
  bool hit = false;
  const auto plain = load_or_build({}, b, hit);
  if (!plain.find(x)) {
    std::cerr << "error: " << x.hexlen() << " has no program of length <= " << b.L << " halting within "
              << b.T << " steps\n";
    return kExitFail;
  }
  const auto models = harvest_models(plain, b.L);
  const auto cond = build_conditional_tables(models, plain, {b.workers});
  const auto s = compute_profiles(x, plain, models, cond);
  const auto slack = load_slack(a.golden);

  const fs::path out(a.out);
  fs::create_directories(out);
  write_file(out / "structure.csv", profile_csv(s.structure, x));
  write_file(out / "stochasticity.csv", profile_csv(s.stochasticity.unclamped, x));
  write_file(out / "bounded.csv", profile_csv(s.bounded, x));

  const auto report = coincidence_report(x, s.structure, s.stochasticity.unclamped, s.bounded, slack);
  auto j = report.to_json();
  j["manifest"] = {{"machine", plain.machine.version_tag}, {"L", b.L}, {"T", b.T}, {"command", "profiles"}};
  write_file(out / "coincidence.json", j.dump(2) + "\n");

  if (a.rank) {
    const auto rank = rank_profile(x, 0, b.L, plain);
    std::string csv = "m,after,s,complexity_coord,excess,x_len,x_hex,L,T,machine\n";
    for (const auto& p : rank.points) {
      csv += std::to_string(p.m) + "," + std::to_string(p.after) + "," + std::to_string(p.s) + "," +
             std::to_string(p.complexity_coord()) + "," +
             std::to_string(static_cast<std::int64_t>(p.m) - s.plain_complexity) + "," +
             std::to_string(x.size()) + "," + x.hex() + "," + std::to_string(b.L) + "," +
             std::to_string(b.T) + "," + plain.machine.version_tag + "\n";
    }
    write_file(out / "rank.csv", csv);
  }
  std::cout << "C(x)=" << s.plain_complexity << " eps sb=" << format_real(report.eps_sb)
            << " ss=" << format_real(report.eps_ss) << " bs=" << format_real(report.eps_bs)
            << (report.pass ? " within" : " above") << " slack\n";
  return 0;
}

struct VerifyArgs {
  std::string scale = "smoke";
  std::string report;
  std::string golden = "golden/coincidence.json";
  std::string artifacts;
  unsigned workers = 0;
};

int cmd_verify(const VerifyArgs& a) {
  acceptance::Options o;
  o.scale = a.scale == "full" ? acceptance::Scale::Full : acceptance::Scale::Smoke;
  o.golden = a.golden;
  o.artifact_dir = a.artifacts;
  o.workers = a.workers;
  const auto results = acceptance::run(o);
  bool all = true;
  for (const auto& c : results) {
    std::cout << acceptance::format_line(c) << "\n";
    all = all && c.pass;
  }
  if (!a.report.empty()) write_file(a.report, acceptance::report_json(results, o).dump(2) + "\n");
  return all ? 0 : kExitFail;
}

std::string fixed10(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10f", v);
  return buf;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Algorithmic statistics on the KVM-8 reference machine"};
  app.require_subcommand(1);

  Budget table_budget;
  std::string condition = "0:";
  auto* table = app.add_subcommand("table", "build or load a run table");
  table->add_option("--condition", condition, "condition as len:hex")->capture_default_str();
  add_budget(table, table_budget);

  Budget profile_budget;
  ProfilesArgs pa;
  auto* profiles = app.add_subcommand("profiles", "structure, stochasticity and bounded profiles of x");
  profiles->add_option("--x", pa.x, "string as len:hex")->required();
  profiles->add_flag("--rank", pa.rank, "also write the rank profile points");
  profiles->add_option("--out", pa.out, "output directory")->capture_default_str();
  profiles->add_option("--golden", pa.golden, "slack file")->capture_default_str();
  add_budget(profiles, profile_budget);

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "run the acceptance suite");
  verify->add_option("--scale", va.scale)->check(CLI::IsMember({"smoke", "full"}))->capture_default_str();
  verify->add_option("--report", va.report, "write a JSON report here");
  verify->add_option("--golden", va.golden, "slack file")->capture_default_str();
  verify->add_option("--artifacts", va.artifacts, "keep per-criterion output files here");
  verify->add_option("--workers", va.workers, "threads (0: all cores)");

  double shannon = 0;
  std::vector<std::int64_t> binom;
  auto* analytic = app.add_subcommand("analytic", "closed-form reference values");
  auto* sh = analytic->add_option("--shannon", shannon, "binary entropy H(p)");
  auto* bi = analytic->add_option("--binom", binom, "log2 binomial(N, M) and the two-part total")->expected(2);
  sh->excludes(bi);
  analytic->require_option(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (*table) return cmd_table(condition, table_budget);
    if (*profiles) return cmd_profiles(pa, profile_budget);
    if (*verify) return cmd_verify(va);
    if (*analytic) {
      if (*sh) {
        std::cout << fixed10(shannon_entropy(shannon)) << "\n";
      } else {
        const auto r = bernoulli_two_part(binom[0], binom[1]);
        std::cout << "log_count " << fixed10(r.log_count) << "\ntotal_hint " << fixed10(r.total_hint) << "\n";
      }
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kExitUsage;
}
