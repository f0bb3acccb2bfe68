#include "doctest.h"

#include <algorithm>

#include "algstat/enumerate.hpp"
#include "algstat/error.hpp"
#include "algstat/oracle.hpp"
#include "helpers.hpp"

using namespace algstat;
using algstat::testing::bits;

namespace {

RunTable table(std::uint32_t L, std::uint64_t T, unsigned workers = 1) {
  return build_run_table({}, BitString(), L, T, {workers});
}

}  // namespace

TEST_CASE("enumerate_programs") {
  const auto l0 = enumerate_programs(0);
  REQUIRE(l0.size() == 1);
  CHECK(l0[0].raw().empty());
  CHECK(enumerate_programs(2).size() == 7);
  const auto l3 = enumerate_programs(3);
  CHECK(l3.size() == 13);
  CHECK(std::none_of(l3.begin(), l3.end(), [](const Program& p) {
    return p.raw() == bits("101") || p.raw() == bits("110");
  }));
  CHECK(std::is_sorted(l3.begin(), l3.end(),
                       [](const Program& a, const Program& b) { return a.raw() < b.raw(); }));
  CHECK_THROWS_AS(enumerate_programs(40), Error);
}

TEST_CASE("build_run_table: hand-derived anchors") {
  SUBCASE("L=0, T=0") {
    const auto t = table(0, 0);
    REQUIRE(t.rows.size() == 1);
    const RunRow& row = t.rows.at(bits(""));
    CHECK(row.min_len == 0);
    CHECK(row.witness.raw().empty());
    CHECK(row.min_steps == 0);
    CHECK(t.bb_by_len == std::vector<std::uint64_t>{0});
  }
  SUBCASE("L=3, T=10") {
    const auto t = table(3, 10);
    CHECK(t.rows.size() == 2);
    REQUIRE(t.find(bits("0")));
    CHECK(t.find(bits("0"))->min_len == 3);
    CHECK(t.find(bits("0"))->witness.raw() == bits("011"));
    CHECK(t.bb_by_len == std::vector<std::uint64_t>{0, 0, 0, 1});
  }
  SUBCASE("L=6, T=10") {
    const auto t = table(6, 10);
    REQUIRE(t.find(bits("1")));
    CHECK(t.find(bits("1"))->min_len == 6);
    CHECK(t.find(bits("1"))->witness.raw() == bits("010011"));
  }
}

TEST_CASE("build_run_table refuses more than desk scale") {
  CHECK_THROWS_AS(table(40, 10), Error);
  CHECK_THROWS_AS(build_run_table({}, {}, 10, 10, {1, 1024}), Error);
  CHECK_NOTHROW(build_run_table({}, {}, 9, 10, {1, 1024}));
  try {
    table(26, 10);
    FAIL("expected ResourceBudget");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ResourceBudget);
  }
}

TEST_CASE("pipeline equals the oracle") {
  const std::vector<BitString> conditions{bits(""), bits("0001"), bits("0001110110"), bits("11")};
  for (const auto& cond : conditions) {
    for (std::uint32_t L : {0U, 2U, 3U, 5U, 9U, 12U}) {
      for (std::uint64_t T : {0ULL, 1ULL, 3ULL, 256ULL}) {
        CAPTURE(cond.str());
        CAPTURE(L);
        CAPTURE(T);
        CHECK(build_run_table({}, cond, L, T, {2}) == oracle::run_table(cond, L, T));
      }
    }
  }
}

TEST_CASE("schedule independence") {
  const auto one = table(15, 300, 1);
  CHECK(one == table(15, 300, 8));
  CHECK(one == table(15, 300, 3));
}

TEST_CASE("row invariants") {
  const auto t = table(15, 200);
  CHECK(t.rows.contains(bits("")));
  CHECK(t.rows.at(bits("")).min_len == 0);
  for (const auto& [output, row] : t.rows) {
    const auto r = execute(row.witness, {}, t.step_cap);
    CHECK(r.status == ExecStatus::Halted);
    CHECK(r.output == output);
    CHECK(row.witness.length() == row.min_len);
    REQUIRE_FALSE(row.frontier.empty());
    CHECK(row.frontier.front().len == row.min_len);
    CHECK(row.frontier.front().steps == row.min_steps);
    for (std::size_t i = 1; i < row.frontier.size(); ++i) {
      CHECK(row.frontier[i].len > row.frontier[i - 1].len);
      CHECK(row.frontier[i].steps < row.frontier[i - 1].steps);
    }
    for (const auto& fp : row.frontier) {
      const auto e = execute(fp.witness, {}, t.step_cap);
      CHECK(e.output == output);
      CHECK(e.steps == fp.steps);
    }
  }
  for (std::size_t k = 1; k < t.bb_by_len.size(); ++k) {
    CHECK(t.bb_by_len[k] >= t.bb_by_len[k - 1]);
    CHECK(t.bb_by_len[k] <= t.step_cap);
  }
}

TEST_CASE("exhaustiveness: no shorter program prints a tabled short string") {
  const auto t = table(12, 64);
  for (const auto& [output, row] : t.rows) {
    if (output.size() > 3) continue;
    for_each_program(row.min_len == 0 ? 0 : row.min_len - 1, [&](const Program& p) {
      if (p.length() >= row.min_len) return;
      const auto r = execute(p, {}, 64);
      CHECK_FALSE((r.status == ExecStatus::Halted && r.output == output));
    });
  }
}

TEST_CASE("tables are monotone in L and T") {
  const std::vector<std::pair<std::uint32_t, std::uint64_t>> budgets{
      {6, 4}, {9, 4}, {9, 16}, {12, 16}, {12, 256}, {15, 256}};
  for (std::size_t i = 0; i + 1 < budgets.size(); ++i) {
    const auto small = table(budgets[i].first, budgets[i].second);
    const auto large = table(budgets[i + 1].first, budgets[i + 1].second);
    for (const auto& [output, row] : small.rows) {
      const RunRow* big = large.find(output);
      REQUIRE(big);
      CHECK(big->min_len <= row.min_len);
    }
  }
}

TEST_CASE("dovetail_first_appearance") {
  CHECK(dovetail_first_appearance(0, 10) == std::vector{bits("")});
  CHECK(dovetail_first_appearance(3, 10) == std::vector{bits(""), bits("0")});
  const auto six = dovetail_first_appearance(6, 10);
  const auto zero = std::find(six.begin(), six.end(), bits("0"));
  const auto one = std::find(six.begin(), six.end(), bits("1"));
  REQUIRE(one != six.end());
  CHECK(zero < one);
}

TEST_CASE("first appearance from frontiers equals lockstep simulation") {
  for (std::uint64_t T : {1ULL, 5ULL, 64ULL}) {
    const auto t = table(12, T);
    for (std::uint32_t m = 0; m <= 12; ++m) {
      CAPTURE(m);
      CAPTURE(T);
      CHECK(first_appearance_order(t, m) == oracle::first_appearance(m, T));
    }
  }
  CHECK_THROWS_AS(first_appearance_order(table(3, 5), 4), Error);
}
