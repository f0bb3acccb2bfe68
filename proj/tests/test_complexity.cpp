#include "doctest.h"

#include "algstat/codec.hpp"
#include "algstat/complexity.hpp"
#include "algstat/error.hpp"
#include "algstat/oracle.hpp"
#include "helpers.hpp"

using namespace algstat;
using algstat::testing::bits;

namespace {

RunTable plain(std::uint32_t L, std::uint64_t T) { return build_run_table({}, {}, L, T, {1}); }

std::optional<std::uint32_t> value(const ComplexityValue& c) { return c.bits; }

}  // namespace

TEST_CASE("plain complexity anchors") {
  for (auto [L, T] : {std::pair{6U, 2ULL}, {9U, 64ULL}, {15U, 1024ULL}}) {
    const auto t = plain(L, T);
    CHECK(value(plain_complexity(bits(""), t)) == 0U);
    CHECK(value(plain_complexity(bits("0"), t)) == 3U);
    CHECK(value(plain_complexity(bits("1"), t)) == 6U);
  }
  CHECK(plain_complexity(bits("1"), plain(5, 100)).infinite());
  CHECK(plain_complexity(bits("1"), plain(6, 1)).infinite());
  const auto c = plain_complexity(bits("0"), plain(3, 1));
  CHECK(c.max_len == 3);
  CHECK(c.step_cap == 1);
  CHECK_THROWS_AS(plain_complexity(bits("0"), build_run_table({}, bits("01"), 3, 1)), Error);
}

TEST_CASE("conditional complexity") {
  const auto s01 = encode_set(canonicalize(std::vector{bits("0"), bits("1")}));
  const auto t = build_run_table({}, s01, 12, 256, {1});
  CHECK(value(conditional_complexity(bits(""), s01, t)) == 0U);
  // Frozen from the oracle's conditioned table.
  CHECK(value(conditional_complexity(bits("0"), s01, t)) == 3U);
  CHECK(value(conditional_complexity(bits("1"), s01, t)) == 6U);
  CHECK_THROWS_AS(conditional_complexity(bits("0"), bits("0110"), t), Error);

  const auto e0 = encode_element(bits("0"));
  const auto te = build_run_table({}, e0, 12, 256, {1});
  CHECK(conditional_complexity(bits("0"), e0, te).value() <= 3U);
}

TEST_CASE("conditioning never hurts") {
  const auto p = plain(12, 128);
  for (const auto& cond : {encode_element(bits("0")), encode_element(bits("101")),
                           encode_set(canonicalize(std::vector{bits("0"), bits("1")}))}) {
    const auto c = build_run_table({}, cond, 12, 128, {1});
    for (const auto& [x, row] : p.rows) {
      const auto cx = conditional_complexity(x, cond, c);
      REQUIRE_FALSE(cx.infinite());
      CHECK(cx.value() <= row.min_len);
    }
  }
}

TEST_CASE("time-bounded complexity") {
  const auto t = plain(15, 256);
  CHECK(time_bounded_complexity(bits("0"), 0, t).infinite());
  CHECK(value(time_bounded_complexity(bits("0"), 1, t)) == 3U);
  CHECK_THROWS_AS(time_bounded_complexity(bits("0"), 257, t), Error);
  for (const auto& [x, row] : t.rows) {
    std::optional<std::uint32_t> prev;
    for (std::uint64_t s = 0; s <= 40; ++s) {
      const auto kt = time_bounded_complexity(x, s, t);
      if (prev) {
        REQUIRE_FALSE(kt.infinite());
        CHECK(kt.value() <= *prev);
      }
      prev = kt.bits;
    }
    CHECK(value(time_bounded_complexity(x, t.bb_by_len[row.min_len], t)) == row.min_len);
  }
}

TEST_CASE("time-bounded complexity equals re-running every program") {
  const auto t = plain(9, 32);
  for (const auto& [x, row] : t.rows) {
    for (std::uint64_t s = 0; s <= 12; ++s) {
      CHECK(value(time_bounded_complexity(x, s, t)) == oracle::time_bounded_complexity(x, 9, s));
    }
  }
}

TEST_CASE("busy beaver bound") {
  const auto t = plain(12, 256);
  CHECK(busy_beaver_bound(0, t) == 0);
  CHECK(busy_beaver_bound(2, t) == 0);
  CHECK(busy_beaver_bound(3, t) == 1);
  for (std::uint32_t k = 0; k <= 12; ++k) CHECK(busy_beaver_bound(k, t) == oracle::busy_beaver(k, 256));
  CHECK_THROWS_AS(busy_beaver_bound(13, t), Error);
}

TEST_CASE("depth profile") {
  const auto t = plain(9, 64);
  const Profile p = depth_profile(bits("1"), t);
  CHECK(p.kind == ProfileKind::Bounded);
  REQUIRE(p.values.size() == 10);
  // Frozen from the oracle: K^B(k)("1") is infinite until B(k) reaches 2 at k = 6.
  const std::vector<std::optional<double>> expected{std::nullopt, std::nullopt, std::nullopt,
                                                    std::nullopt, std::nullopt, std::nullopt,
                                                    0.0,          0.0,          0.0,
                                                    0.0};
  CHECK(p.values == expected);
  CHECK(p.at(0) == 10.0);  // TOP reads as L + 1

  const Profile e = depth_profile(bits(""), t);
  for (std::size_t k = 0; k < e.values.size(); ++k) CHECK(e.values[k] == 0.0);
  CHECK_THROWS_AS(depth_profile(bits("10101"), t), Error);
}

TEST_CASE("print_program") {
  CHECK(print_program(bits("")).raw().empty());
  CHECK(print_program(bits("0")).raw() == bits("011"));
  CHECK(print_program(bits("10")).raw() == bits("010011010011"));
  for (const auto& x : algstat::testing::all_words(10)) {
    const Program p = print_program(x);
    CHECK(p.length() <= 6 * x.size());
    const auto r = execute(p, {}, 6 * x.size() + 1);
    CHECK(r.status == ExecStatus::Halted);
    CHECK(r.output == x);
  }
}
