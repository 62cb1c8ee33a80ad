#include "verlinde/fusion.hpp"

#include <doctest.h>

#include "test_util.hpp"

#include <cmath>

using namespace verlinde;
using test_util::w;

namespace {

// sl(2) level-ell fusion in closed form: N = 1 iff the interval and parity
// conditions hold.
bool sl2_fusion_rule(Int level, Int l, Int m, Int n) {
  if ((l + m + n) % 2 != 0) return false;
  return std::abs(l - m) <= n && n <= std::min(l + m, 2 * level - l - m);
}

}  // namespace

TEST_CASE("level-1 sl(2) fusion discards the wall term") {
  FusionTable table{AlgebraCtx(2, 1)};
  CHECK(table.fusion_coeff(w({1}), w({1}), w({0})) == 1);
  CHECK(table.fusion_coeff(w({1}), w({1}), w({1})) == 0);
}

TEST_CASE("unit law") {
  FusionTable table{AlgebraCtx(3, 2)};
  for (const Weight& mu : table.alcove())
    for (const Weight& nu : table.alcove())
      CHECK(table.fusion_coeff(Weight::zero(3), mu, nu) ==
            (mu == nu ? 1 : 0));
}

TEST_CASE("sl(2) closed-form rule across levels") {
  for (Int level = 1; level <= 6; ++level) {
    FusionTable table{AlgebraCtx(2, level)};
    for (Int l = 0; l <= level; ++l)
      for (Int m = 0; m <= level; ++m)
        for (Int n = 0; n <= level; ++n)
          CHECK(table.fusion_coeff(w({l}), w({m}), w({n})) ==
                (sl2_fusion_rule(level, l, m, n) ? 1 : 0));
  }
}

TEST_CASE("three-point symmetry and commutativity") {
  FusionTable table{AlgebraCtx(3, 2)};
  const auto& alcove = table.alcove();
  for (const Weight& l : alcove)
    for (const Weight& m : alcove)
      for (const Weight& n : alcove) {
        const BigInt base = table.n0_threept(l, m, n);
        CHECK(base == table.n0_threept(m, l, n));
        CHECK(base == table.n0_threept(n, m, l));
        CHECK(base == table.n0_threept(l, n, m));
        CHECK(table.fusion_coeff(l, m, n) == table.fusion_coeff(m, l, n));
      }
  CHECK(table.n0_threept(Weight::zero(3), Weight::zero(3),
                         Weight::zero(3)) == 1);
  CHECK(FusionTable{AlgebraCtx(3, 1)}.n0_threept(w({1, 0}), w({1, 0}),
                                                 w({1, 0})) == 1);
  CHECK(FusionTable{AlgebraCtx(2, 2)}.n0_threept(w({2}), w({1}), w({1})) == 1);
}

TEST_CASE("fusion respects the Z_r grading") {
  for (int r = 2; r <= 4; ++r) {
    FusionTable table{AlgebraCtx(r, 2)};
    const auto& alcove = table.alcove();
    for (const Weight& l : alcove)
      for (const Weight& m : alcove)
        for (const Weight& n : alcove)
          if (table.fusion_coeff(l, m, n) != 0)
            CHECK((zr_charge(l) + zr_charge(m)) % r == zr_charge(n));
  }
}

TEST_CASE("associativity of the iterated product") {
  for (int r = 2; r <= 3; ++r)
    for (Int level = 1; level <= 3; ++level) {
      FusionTable table{AlgebraCtx(r, level)};
      const auto& alcove = table.alcove();
      for (const Weight& a : alcove)
        for (const Weight& b : alcove)
          for (const Weight& c : alcove) {
            // ((a b) c) via fuse_multiset vs a (b c) assembled by hand
            const std::vector<Weight> abc{a, b, c};
            const FusionTable::Row left = table.fuse_multiset(abc);
            FusionTable::Row right;
            for (const auto& [s, coeff] : *table.product(b, c))
              for (const auto& [t, coeff2] : *table.product(a, s))
                right[t] += coeff * coeff2;
            for (auto it = right.begin(); it != right.end();)
              it = it->second == 0 ? right.erase(it) : std::next(it);
            CHECK(left == right);
          }
    }
}

TEST_CASE("classical limit reproduces tensor coefficients") {
  for (int r = 2; r <= 3; ++r) {
    const int n = r - 1;
    std::vector<Weight> grid;
    {
      const AlgebraCtx probe(r, 2 * n);
      for (const Weight& x : enumerate_alcove(probe))
        if (x.a.maxCoeff() <= 2) grid.push_back(x);
    }
    for (const Weight& lambda : grid)
      for (const Weight& mu : grid) {
        const Int low = theta_pairing(lambda) + theta_pairing(mu);
        for (Int level = low; level <= 8; ++level) {
          FusionTable table{AlgebraCtx(r, level)};
          const DecompList classical =
              tensor_decompose(table.ctx(), lambda, mu);
          const auto row = table.product(lambda, mu);
          CHECK(*row == classical.terms);
        }
      }
  }
}

TEST_CASE("triple product at level 2") {
  FusionTable table{AlgebraCtx(2, 2)};
  const std::vector<Weight> triple{w({1}), w({1}), w({1})};
  const FusionTable::Row row = table.fuse_multiset(triple);
  REQUIRE(row.size() == 1);
  CHECK(row.at(w({1})) == 2);

  CHECK(table.fuse_multiset({}).at(Weight::zero(2)) == 1);
  const std::vector<Weight> pair1{w({1}), w({1})};
  CHECK(FusionTable{AlgebraCtx(2, 1)}.fuse_multiset(pair1).at(w({0})) == 1);
}

TEST_CASE("S-matrix closed forms for sl(2)") {
  const SMatrix sm1 = build_smatrix(AlgebraCtx(2, 1));
  const double s = 1.0 / std::sqrt(2.0);
  CHECK(sm1.entries(0, 0).real() == doctest::Approx(s).epsilon(1e-12));
  CHECK(sm1.entries(0, 1).real() == doctest::Approx(s).epsilon(1e-12));
  CHECK(sm1.entries(1, 1).real() == doctest::Approx(-s).epsilon(1e-12));
  CHECK(std::abs(sm1.entries(1, 0).imag()) < 1e-12);

  const SMatrix sm2 = build_smatrix(AlgebraCtx(2, 2));
  CHECK(sm2.entries(0, 0).real() == doctest::Approx(0.5).epsilon(1e-12));
  // full sin form at kappa = 4
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= 2; ++b)
      CHECK(sm2.entries(a, b).real() ==
            doctest::Approx(std::sqrt(0.5) *
                            std::sin(M_PI * (a + 1) * (b + 1) / 4.0))
                .epsilon(1e-12));
}

TEST_CASE("S-matrix unitarity, symmetry, duality, and character ratios") {
  for (int r = 2; r <= 4; ++r)
    for (Int level = 1; level <= 3; ++level) {
      const AlgebraCtx ctx(r, level);
      const SMatrix sm = build_smatrix(ctx);
      CHECK(smatrix_unitarity_defect(sm) < 1e-9);
      CHECK(smatrix_symmetry_defect(sm) < 1e-9);
      CHECK(smatrix_character_deviation(ctx, sm) < 1e-9);
      // conjugation is charge conjugation
      for (const Weight& l : sm.basis)
        for (const Weight& m : sm.basis)
          CHECK(std::abs(std::conj(sm.at(l, m)) - sm.at(dual(l), m)) < 1e-9);
    }
}

TEST_CASE("numeric fusion agrees with Kac-Walton") {
  for (int r = 2; r <= 3; ++r)
    for (Int level = 1; level <= 3; ++level) {
      FusionTable table{AlgebraCtx(r, level)};
      const SMatrix sm = build_smatrix(table.ctx());
      for (const Weight& l : table.alcove())
        for (const Weight& m : table.alcove())
          for (const Weight& n : table.alcove())
            CHECK(table.fusion_coeff(l, m, n) ==
                  fusion_coeff_numeric(sm, l, m, dual(n)));
    }
  CHECK(fusion_coeff_numeric(build_smatrix(AlgebraCtx(2, 1)), w({1}), w({1}),
                             w({0})) == 1);
}

TEST_CASE("fusion rejects inadmissible weights") {
  FusionTable table{AlgebraCtx(2, 1)};
  CHECK_THROWS_AS(table.fusion_coeff(w({2}), w({1}), w({0})),
                  std::invalid_argument);
  CHECK_THROWS_AS(table.fusion_coeff(w({1}), w({-1}), w({0})),
                  std::invalid_argument);
  CHECK_THROWS_AS(table.fusion_coeff(w({1, 0}), w({1}), w({0})),
                  std::invalid_argument);
}

TEST_CASE("corrupted rows are visible through override_product") {
  FusionTable table{AlgebraCtx(2, 2)};
  FusionTable::Row bogus;
  bogus[w({2})] = 5;
  table.override_product(w({1}), w({1}), bogus);
  CHECK(table.fusion_coeff(w({1}), w({1}), w({2})) == 5);
}
