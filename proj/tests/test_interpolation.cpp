#include <gtest/gtest.h>

#include <numeric>
#include <set>

#include "wps/error.hpp"
#include "wps/interpolation.hpp"

using namespace wps;

namespace {

RankProfile doubles(const Weights& w, std::size_t r, Degree d, Sampling s = {}) {
  return hilbert_fat_points(FatPointConfig::double_points(w, r, s), d);
}

}  // namespace

TEST(EvaluationMatrix, OneDoublePointDegreeThree) {
  // Symbolic point [1:p1:p2], checked at p1 = 5, p2 = 7.
  auto cfg = FatPointConfig::double_points({1, 2, 3}, 1);
  cfg.points = {WeightedPoint(Weights{1, 2, 3}, {1, 5, 7})};
  const auto M = build_evaluation_matrix(cfg, 3);
  ASSERT_EQ(M.rows(), 3u);
  ASSERT_EQ(M.cols(), 3u);
  const long ref[3][3] = {{3, 5, 0}, {0, 1, 0}, {0, 0, 1}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) EXPECT_EQ(M(i, j), ref[i][j]) << i << "," << j;
  EXPECT_EQ(rank(RationalField{}, M), 3u);
}

TEST(EvaluationMatrix, EmptyDegreeHasNoColumns) {
  const auto M = build_evaluation_matrix(FatPointConfig::double_points({2, 3}, 2), 1);
  EXPECT_EQ(M.cols(), 0u);
  EXPECT_EQ(M.rows(), 4u);
  EXPECT_EQ(rank(RationalField{}, M), 0u);
}

TEST(EvaluationMatrix, RowCountIsConditionCount) {
  const FatPointConfig cfg({1, 2, 3}, {1, 2, 3});
  EXPECT_EQ(cfg.condition_count(), 1u + 3u + 6u);
  EXPECT_EQ(build_evaluation_matrix(cfg, 7).rows(), 10u);
}

TEST(EvaluationMatrix, SmallPrimeRejected) {
  Sampling s;
  s.field = FieldSpec::modular(7);
  EXPECT_THROW(doubles({1, 2, 3}, 2, 9, s), FieldError);
}

TEST(EvaluationMatrix, DerivativeOperatorsOrder) {
  const auto ops = derivative_operators(3, 1);
  ASSERT_EQ(ops.size(), 3u);
  EXPECT_EQ(ops[0], (std::vector<int>{1, 0, 0}));
  EXPECT_EQ(ops[2], (std::vector<int>{0, 0, 1}));
  EXPECT_EQ(derivative_operators(3, 2).size(), 6u);
}

TEST(HilbertFatPoints, KnownDeficiencies) {
  EXPECT_EQ(doubles({1, 5, 9}, 3, 21).deficiency, 1u);
  const auto p = doubles({1, 1, 1}, 5, 4);
  EXPECT_EQ(p.actual, 14u);
  EXPECT_EQ(p.expected, 15u);
  EXPECT_EQ(p.deficiency, 1u);
  const auto q = doubles({1, 2, 3}, 1, 2);
  EXPECT_EQ(q.actual, 2u);
  EXPECT_TRUE(q.is_ah);
  EXPECT_EQ(doubles({1, 1, 1}, 2, 2).deficiency, 1u);
}

TEST(HilbertFatPoints, DegreeZero) {
  const auto p = doubles({1, 2, 3}, 1, 0);
  EXPECT_EQ(p.actual, 1u);
  EXPECT_TRUE(p.is_ah);
}

TEST(HilbertFatPoints, RationalModeAgrees) {
  Sampling s;
  s.field = FieldSpec::exact();
  EXPECT_EQ(doubles({1, 5, 9}, 3, 21, s).deficiency, 1u);
  EXPECT_EQ(doubles({1, 2, 3}, 4, 9, s).deficiency, 0u);
}

TEST(HilbertFatPoints, Reproducible) {
  const auto cfg = FatPointConfig::double_points({1, 4, 57}, 4);
  EXPECT_EQ(cfg.modulus(), FatPointConfig::double_points({1, 4, 57}, 4).modulus());
  const auto a = deficiency_table(cfg, 30, 45, 1), b = deficiency_table(cfg, 30, 45, 4);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].d, b[i].d);
    EXPECT_EQ(a[i].actual, b[i].actual);
  }
}

TEST(DeficiencyTable, KnownRows) {
  for (const auto& p : deficiency_table(FatPointConfig::double_points({1, 4, 57}, 4), 44, 56)) {
    EXPECT_EQ(p.deficiency, 4u) << p.d;
  }
  EXPECT_EQ(doubles({1, 5, 26}, 2, 25).deficiency, 2u);
  EXPECT_EQ(doubles({1, 2, 3}, 8, 14).deficiency, 0u);
}

TEST(DeficiencyTable, FullRankPersists) {
  const auto cfg = FatPointConfig::double_points({1, 5, 9}, 3);
  bool full = false;
  for (const auto& p : deficiency_table(cfg, 0, 60)) {
    if (full) EXPECT_EQ(p.actual, cfg.condition_count()) << p.d;
    full = full || p.actual == cfg.condition_count();
    EXPECT_LE(p.actual, p.expected);
  }
}

TEST(LineFormula, KnownValues) {
  const std::vector<int> one_double{2};
  EXPECT_EQ(line_interpolation_formula(1, 2, one_double, 2), 2u);
  EXPECT_EQ(line_interpolation_formula(1, 2, one_double, 1), 1u);
  EXPECT_EQ(line_interpolation_formula(2, 3, one_double, 12), 2u);
  EXPECT_THROW(line_interpolation_formula(2, 4, one_double, 3), UnsupportedWeights);
}

TEST(LineFormula, MatchesRankOnSmallCases) {
  for (int a = 1; a <= 4; ++a)
    for (int b = a; b <= 5; ++b) {
      if (std::gcd(a, b) != 1) continue;
      for (const std::vector<int>& m : {std::vector<int>{1}, {2}, {1, 2}, {3}}) {
        const FatPointConfig cfg(Weights{a, b}, m);
        for (Degree d = 0; d <= 40; ++d) {
          EXPECT_EQ(hilbert_fat_points(cfg, d).actual, line_interpolation_formula(a, b, m, d))
              << a << "," << b << " d=" << d;
        }
      }
    }
}

TEST(SimplePoints, Expected) {
  EXPECT_EQ(simple_points_expected({1, 2, 3}, 4, 11), 4u);
  EXPECT_EQ(simple_points_expected({1, 5, 9}, 1, 0), 1u);
  EXPECT_EQ(simple_points_expected({2, 3}, 2, 1), 0u);
  const auto cfg = FatPointConfig::simple_points({1, 3, 4}, 6);
  for (Degree d = 0; d <= 20; ++d) {
    EXPECT_EQ(hilbert_fat_points(cfg, d).actual, simple_points_expected({1, 3, 4}, 6, d));
  }
}

TEST(Sampling, GeneralPointsAreDistinctAndPinned) {
  Rng rng(3, {5, 0});
  const PrimeField f(1000003);
  const auto pts = sample_points(f, Weights{1, 2, 3}, 10, rng);
  std::set<std::uint64_t> u, v;
  for (const auto& p : pts) {
    EXPECT_EQ(p[0], 1u);
    EXPECT_NE(p[1], 0u);
    EXPECT_TRUE(u.insert(p[1]).second);
    EXPECT_TRUE(v.insert(p[2]).second);
  }
}

TEST(DefaultPrime, InRangeAndAvoidsExclusions) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto p = default_prime({1, 2, 3}, seed);
    EXPECT_GE(p, kPrimeLow);
    EXPECT_LE(p, kPrimeHigh);
    EXPECT_TRUE(is_prime(p));
  }
  EXPECT_NE(default_prime({1, 2, 3}, 1), default_prime({1, 2, 3}, 2));
}

TEST(CrossCheck, TwoPrimesAgree) {
  int agreed = 0, total = 0;
  for (Degree d = 4; d <= 24; ++d) {
    const auto cc = cross_check_rank(FatPointConfig::double_points({1, 2, 3}, 4), d);
    EXPECT_NE(cc.prime1, cc.prime2);
    agreed += cc.agreed;
    ++total;
    EXPECT_EQ(cc.rank(), std::min<std::size_t>(count_monomials({1, 2, 3}, d), 12));
  }
  EXPECT_GE(agreed * 100, total * 99);
}

TEST(Neck, RankDropsAtDegreeTwoRB) {
  // b != 1 and c >= (r+1) b
  for (auto [b, c] : {std::pair{2, 5}, std::pair{2, 7}, std::pair{3, 7}, std::pair{3, 10}}) {
    for (std::size_t r = 1; static_cast<std::int64_t>(r + 1) * b <= c; ++r) {
      const Degree d = 2 * static_cast<Degree>(r) * b;
      const auto p = doubles({1, b, c}, r, d);
      EXPECT_LT(p.actual, p.s_d) << b << "," << c << " r=" << r;
    }
  }
}

TEST(FirstDegreeOfThreeR, ScanMatches) {
  // rb < c < (r+1)b: the first d with s_d = 3r is (r-1)b + c
  for (std::int64_t b = 2; b <= 6; ++b)
    for (std::int64_t c = b + 1; c <= 40; ++c)
      for (std::int64_t r = 1; r * b < c; ++r) {
        if (!(c < (r + 1) * b)) continue;
        const Weights w{1, b, c};
        Degree first = -1;
        for (Degree d = 0; d <= 200 && first < 0; ++d) {
          if (count_monomials(w, d) == static_cast<std::uint64_t>(3 * r)) first = d;
        }
        EXPECT_EQ(first, (r - 1) * b + c) << b << "," << c << " r=" << r;
      }
}
