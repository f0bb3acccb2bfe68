#include "doctest.h"

#include "algstat/error.hpp"
#include "algstat/oracle.hpp"
#include "helpers.hpp"

using namespace algstat;
using algstat::testing::bits;

TEST_CASE("oracle refuses larger budgets") {
  CHECK_THROWS_AS(oracle::run_table({}, 15, 10), Error);
  try {
    oracle::models(15, 10, 4);
    FAIL("expected OracleScaleExceeded");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::OracleScaleExceeded);
  }
  CHECK_NOTHROW(oracle::run_table({}, 3, 10));
}

TEST_CASE("oracle tables match the pipeline at the anchor budgets") {
  CHECK(oracle::run_table({}, 3, 10) == build_run_table({}, {}, 3, 10, {1}));
  CHECK(oracle::run_table({}, 12, 256) == build_run_table({}, {}, 12, 256, {1}));
  CHECK(oracle::run_table({}, 12, 256).rows.size() == 12);
}

TEST_CASE("profiles match the oracle on every short string") {
  for (auto [L, T] : {std::pair{12U, 256ULL}, {14U, 64ULL}}) {
    const auto plain = build_run_table({}, {}, L, T, {1});
    const auto models = harvest_models(plain, 6);
    const auto cond = build_conditional_tables(models, plain, {1});
    for (const auto& x : algstat::testing::all_words(4)) {
      CAPTURE(x.str());
      const auto want = oracle::profiles(x, L, T, 6);
      if (!plain.find(x)) {
        CHECK_FALSE(want.present);
        CHECK_THROWS_AS(compute_profiles(x, plain, models, cond), Error);
        continue;
      }
      REQUIRE(want.present);
      const auto got = compute_profiles(x, plain, models, cond);
      CHECK(got.has_model == want.has_model);
      CHECK(got.structure_raw == want.structure_raw);
      CHECK(got.structure == want.structure);
      CHECK(got.stochasticity.unclamped == want.stochasticity);
      CHECK(got.stochasticity.clamped == want.stochasticity_clamped);
      CHECK(got.bounded == want.bounded);
    }
  }
}

TEST_CASE("oracle profiles at (12, 256)") {
  const auto eps = oracle::profiles(bits(""), 12, 256, 6);
  CHECK(eps.present);
  CHECK_FALSE(eps.has_model);
  CHECK(eps.bounded.values == std::vector<std::optional<double>>(13, 0.0));
  const auto zero = oracle::profiles(bits("0"), 12, 256, 6);
  std::vector<std::optional<double>> b(13, 0.0);
  b[0] = b[1] = b[2] = std::nullopt;
  CHECK(zero.bounded.values == b);
  CHECK_FALSE(oracle::profiles(bits("0110"), 12, 256, 6).present);
}
