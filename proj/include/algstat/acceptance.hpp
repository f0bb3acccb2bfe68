#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"

namespace algstat::acceptance {

enum class Scale { Smoke, Full };

struct Options {
  Scale scale = Scale::Full;
  unsigned workers = 0;  // 0: hardware concurrency
  std::filesystem::path golden;
  // Where per-criterion artifact files go. Empty: a scratch directory that is
  // removed afterwards.
  std::filesystem::path artifact_dir;
  bool determinism = true;  // criterion 9 re-runs 1..8 twice
};

struct Criterion {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

std::vector<Criterion> run(const Options& options);

// "PASS  3 print-bound  <detail>  (0.4 s)"
std::string format_line(const Criterion& c);

nlohmann::ordered_json report_json(const std::vector<Criterion>& results, const Options& options);

}  // namespace algstat::acceptance
