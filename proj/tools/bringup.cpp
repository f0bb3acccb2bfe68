// Measures profile distances at the reference budgets and writes the golden
// slack file the coincidence and rank criteria read.
//
//   algstat-bringup --out golden/coincidence.json

#include <cmath>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "algstat/profiles.hpp"
#include "algstat/serialize.hpp"

using namespace algstat;

namespace {

struct Measured {
  BitString x;
  CoincidenceReport report;
  double rank = 0;
};

std::vector<Measured> measure(std::uint32_t L, std::uint64_t T, std::uint32_t word_len,
                              std::uint32_t max_elem) {
  const auto plain = build_run_table({}, {}, L, T);
  const auto models = harvest_models(plain, max_elem);
  const auto cond = build_conditional_tables(models, plain);
  std::vector<Measured> out;
  for (std::uint32_t len = 0; len <= word_len; ++len) {
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << len); ++v) {
      const auto x = BitString::from_uint(v, len);
      if (!plain.find(x)) continue;
      const auto s = compute_profiles(x, plain, models, cond);
      Measured m{x, coincidence_report(x, s.structure, s.stochasticity.unclamped, s.bounded, {}), 0};
      m.rank = rank_distance(rank_profile(x, 0, L, plain), s.structure, s.plain_complexity);
      out.push_back(std::move(m));
    }
  }
  return out;
}

nlohmann::ordered_json entry(const Measured& m) {
  nlohmann::ordered_json j;
  j["x"] = to_json(m.x);
  j["epsilons"] = {{"sb", m.report.eps_sb}, {"ss", m.report.eps_ss}, {"bs", m.report.eps_bs}};
  j["rank"] = m.rank;
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Measure and pin the coincidence slack"};
  std::string out = "golden/coincidence.json";
  app.add_option("--out", out, "golden file to write");
  CLI11_PARSE(app, argc, argv);

  const std::uint32_t L = 18;
  const std::uint64_t T = 1024;
  const auto measured = measure(L, T, 6, 6);

  // b = 0; a is the smallest multiple of 1e-6 covering every measured
  // distance, rank distances included.
  double ratio = 0;
  for (const auto& m : measured) {
    const double scale = std::log2(static_cast<double>(m.x.size()) + 2.0);
    ratio = std::max({ratio, m.report.max_epsilon() / scale, m.rank / scale});
  }
  CoincidenceSlack slack{std::ceil(ratio * 1e6) / 1e6, 0};

  nlohmann::ordered_json j;
  j["slack"] = {{"a", slack.a}, {"b", slack.b}};
  j["reference"] = {{"L", L}, {"T", T}, {"machine", MachineConfig{}.version_tag}, {"max_x_len", 6}};
  auto& arr = j["strings"] = nlohmann::ordered_json::array();
  for (const auto& m : measured) arr.push_back(entry(m));

  // The worked example at the first budget where "0" has a model.
  for (const auto& m : measure(24, 256, 1, 24)) {
    if (m.x == BitString::from_bits("0")) j["example_0_L24_T256"] = entry(m);
  }

  std::ofstream f(out, std::ios::trunc);
  f << j.dump(2) << "\n";
  if (!f) {
    std::cerr << "cannot write " << out << "\n";
    return 4;
  }
  std::cout << "a=" << format_real(slack.a) << " b=0 over " << measured.size() << " strings\n";
  return 0;
}
