#include "verlinde/harness.hpp"

#include <doctest.h>

#include "test_util.hpp"

using namespace verlinde;
using test_util::w;

TEST_CASE("prv seed and partner reproduce the one-marking construction") {
  const AlgebraCtx r2(2, 2);
  CHECK(prv_seed(r2, w({2})) == w({1}));
  CHECK(prv_partner(r2, w({2})) == w({1}));
  FusionTable t2(r2);
  CHECK(t2.fusion_coeff(w({2}), w({1}), w({1})) == 1);

  CHECK(prv_seed(r2, Weight::zero(2)) == Weight::zero(2));
  CHECK(prv_partner(r2, Weight::zero(2)) == Weight::zero(2));
  CHECK(t2.n0_threept(Weight::zero(2), Weight::zero(2), Weight::zero(2)) == 1);

  const AlgebraCtx r3(3, 2);
  CHECK(prv_seed(r3, w({1, 1})) == w({1, 0}));
  CHECK(prv_partner(r3, w({1, 1})) == w({1, 0}));
  FusionTable t3(r3);
  CHECK(t3.n0_threept(w({1, 1}), w({1, 0}), w({0, 1})) >= 1);

  CHECK_THROWS_AS(prv_seed(r3, w({1, 0})), std::invalid_argument);
}

TEST_CASE("equation lambda = mu' - w mu' with the chosen Coxeter word") {
  const AlgebraCtx r2(2, 2);
  WeylWord word2 = prv_seed_word(r2);
  CHECK(word2.letters == std::vector<int>{1});
  CHECK(verify_eq3(r2, w({2}), w({1}), word2));

  const AlgebraCtx r3(3, 2);
  WeylWord word3 = prv_seed_word(r3);
  CHECK(word3.letters == std::vector<int>{2, 1});
  CHECK(verify_eq3(r3, w({1, 1}), w({1, 0}), word3));
  CHECK(verify_eq3(r3, Weight::zero(3), Weight::zero(3), word3));

  // every alcove-and-root-lattice weight satisfies it with its own seed
  for (int r = 2; r <= 4; ++r)
    for (Int level = 1; level <= 4; ++level) {
      const AlgebraCtx ctx(r, level);
      const WeylWord word = prv_seed_word(ctx);
      for (const Weight& lambda : enumerate_alcove(ctx)) {
        if (!in_root_lattice(ctx, lambda)) continue;
        CHECK(verify_eq3(ctx, lambda, prv_seed(ctx, lambda), word));
      }
    }
}

TEST_CASE("n_1 is positive on the root lattice part of the alcove") {
  for (int r = 2; r <= 3; ++r)
    for (Int level = 1; level <= 4; ++level) {
      FusionTable table(AlgebraCtx(r, level));
      BlockCache cache;
      for (const Weight& lambda : table.alcove()) {
        if (!in_root_lattice(table.ctx(), lambda)) continue;
        const Weight mu = prv_partner(table.ctx(), lambda);
        CHECK(table.fusion_coeff(lambda, mu, mu) >= 1);
        CHECK(n_g(cache, table, 1, {&lambda, 1}) > 0);
      }
    }
}

TEST_CASE("collapse chain") {
  FusionTable t21(AlgebraCtx(2, 1));
  const std::vector<Weight> ones{w({1}), w({1})};
  CHECK(collapse_chain(t21, ones) == w({0}));
  CHECK(t21.fuse_multiset(ones).at(w({0})) == 1);

  FusionTable t22(AlgebraCtx(2, 2));
  const std::vector<Weight> twos{w({2}), w({2})};
  CHECK(collapse_chain(t22, twos) == w({0}));
  CHECK(in_root_lattice(t22.ctx(), collapse_chain(t22, twos)));

  const std::vector<Weight> single{w({2})};
  CHECK(collapse_chain(t22, single) == w({2}));
  CHECK(collapse_chain(t22, {}) == Weight::zero(2));
}

TEST_CASE("collapse preserves the root-lattice class of the sum") {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 200; ++trial) {
    const int r = 2 + static_cast<int>(rng() % 2);
    const Int level = 1 + static_cast<Int>(rng() % 3);
    FusionTable table(AlgebraCtx(r, level));
    const auto& alcove = table.alcove();
    std::vector<Weight> weights;
    const int s = 1 + static_cast<int>(rng() % 3);
    Weight total = Weight::zero(r);
    for (int i = 0; i < s; ++i) {
      weights.push_back(alcove[rng() % alcove.size()]);
      total = total + weights.back();
    }
    const Weight collapsed = collapse_chain(table, weights);
    CHECK(level_admissible(table.ctx(), collapsed));
    CHECK(zr_charge(collapsed) == zr_charge(total));
    if (in_root_lattice(table.ctx(), total)) {
      CHECK(in_root_lattice(table.ctx(), collapsed));
      CHECK(table.fuse_multiset(weights).count(collapsed) == 1);
      BlockCache cache;
      CHECK(verify_chain_inequalities(cache, table, weights, collapsed));
    }
  }
}

TEST_CASE("verify_prv accepts the spec'd examples") {
  FusionTable table(AlgebraCtx(2, 2));
  std::vector<WeylWord> words{WeylWord::identity()};
  WeylWord s1;
  s1.letters = {1};
  words.push_back(s1);
  const SweepReport report =
      verify_prv(table, w({1}), w({1}), words);
  CHECK(report.ok());
  CHECK(report.cases_checked == 2);
  // the two folds behind those words
  CHECK(prv_fold(table.ctx(), w({1}), w({1}), words[0]) == w({2}));
  CHECK(prv_fold(table.ctx(), w({1}), w({1}), words[1]) == w({0}));
  CHECK(table.fusion_coeff(w({1}), w({1}), w({2})) == 1);
  CHECK(table.fusion_coeff(w({1}), w({1}), w({0})) == 1);

  // vacuum partner: every word folds onto lambda1 itself
  const std::vector<WeylWord> all = affine_word_box(table.ctx(), 1);
  const SweepReport vac = verify_prv(table, w({2}), w({0}), all);
  CHECK(vac.ok());
  for (const WeylWord& word : all)
    CHECK(prv_fold(table.ctx(), w({2}), w({0}), word) == w({2}));
}

TEST_CASE("verify_bound") {
  FusionTable t21(AlgebraCtx(2, 1));
  BlockCache cache;
  const BoundCheck empty2 = verify_bound(cache, t21, 2, {});
  CHECK(empty2.applicable);
  CHECK(empty2.holds);
  CHECK(empty2.n == 4);
  CHECK(empty2.bound == 2);

  FusionTable t22(AlgebraCtx(2, 2));
  BlockCache cache22;
  const std::vector<Weight> single{w({2})};
  const BoundCheck one = verify_bound(cache22, t22, 1, single);
  CHECK(one.applicable);
  CHECK(one.holds);
  CHECK(one.n == 1);
  CHECK(one.bound == 1);

  const std::vector<Weight> odd{w({1})};
  const BoundCheck na = verify_bound(cache22, t22, 1, odd);
  CHECK_FALSE(na.applicable);

  CHECK_THROWS_AS(verify_bound(cache22, t22, 0, {}), std::invalid_argument);
}

TEST_CASE("affine word box sizes") {
  const AlgebraCtx r3(3, 1);
  CHECK(affine_word_box(r3, 0).size() == 6);
  CHECK(affine_word_box(r3, 1).size() == 6 * 9);
  CHECK(affine_word_box(AlgebraCtx(2, 1), 2).size() == 2 * 5);
}

TEST_CASE("weight multiset enumeration") {
  const AlgebraCtx ctx(2, 1);
  const auto sets = weight_multisets(ctx, 2);
  // {}, {0}, {1}, {00}, {01}, {11}
  CHECK(sets.size() == 6);
  CHECK(sets[0].empty());
}

TEST_CASE("default sweep is clean") {
  SweepConfig config;
  config.r_max = 2;
  config.level_max = 2;
  config.genus_max = 2;
  config.max_points = 2;
  const SweepReport report = run_sweep(config);
  CHECK(report.ok());
  CHECK(report.violations.empty());
  CHECK(report.complete);
  CHECK(report.cases_checked > 0);
  CHECK(report.cases_by_check.at("theorem_bound") > 0);
  CHECK(report.cases_by_check.at("prv") > 0);

  const std::string json_text = report.to_json(config);
  CHECK(json_text.find("\"ok\": true") != std::string::npos);
}

TEST_CASE("empty sweep grid checks nothing") {
  SweepConfig config;
  config.r_min = 3;
  config.r_max = 2;
  const SweepReport report = run_sweep(config);
  CHECK(report.cases_checked == 0);
  CHECK(report.ok());
}

TEST_CASE("a corrupted fusion table is flagged") {
  SweepConfig config;
  config.r_min = 2;
  config.r_max = 2;
  config.level_min = 2;
  config.level_max = 2;
  config.genus_max = 1;
  config.max_points = 2;
  const SweepReport report =
      run_sweep(config, [](FusionTable& table) {
        FusionTable::Row bogus;
        bogus[test_util::w({2})] = 1;  // drops the true (0) + (2) support
        table.override_product(test_util::w({1}), test_util::w({1}), bogus);
      });
  CHECK_FALSE(report.ok());
  CHECK_FALSE(report.violations.empty());
}
