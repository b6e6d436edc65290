#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include "wps/error.hpp"
#include "wps/induction.hpp"

using namespace wps;

namespace {
const Weights kP123{1, 2, 3};
}

TEST(ClosedForms, MatchCounting) {
  for (std::int64_t d = -3; d <= 3000; ++d) {
    ASSERT_EQ(plane123::s(d), static_cast<std::int64_t>(count_monomials(kP123, d)));
    ASSERT_EQ(plane123::s1(d), static_cast<std::int64_t>(count_monomials({2, 3}, d)));
    ASSERT_EQ(plane123::s2(d), static_cast<std::int64_t>(count_monomials({1, 3}, d)));
    ASSERT_EQ(plane123::s3(d), static_cast<std::int64_t>(count_monomials({1, 2}, d)));
  }
  EXPECT_EQ(plane123::s(14), 24);
  EXPECT_EQ(plane123::s3(14), 8);
  EXPECT_EQ(plane123::s3(11), 6);
}

TEST(Candidates, TopOfTheTrace) {
  const auto c = terracini_candidates(kP123, 14, 8);
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c[0].weight, 3);
  EXPECT_EQ(c[0].q, 4);
  EXPECT_EQ(c[0].lower, 8);
  EXPECT_EQ(c[0].sbar, 8);
}

TEST(Candidates, SecondStage) {
  const auto c = terracini_candidates(kP123, 11, 5);
  ASSERT_FALSE(c.empty());
  EXPECT_EQ(c[0].weight, 3);
  EXPECT_EQ(c[0].q, 3);
  EXPECT_EQ(c[0].lower, 5);
  EXPECT_EQ(c[0].sbar, 6);
}

TEST(Candidates, StraightPlaneExceptionsHaveNone) {
  EXPECT_TRUE(terracini_candidates({1, 1, 1}, 2, 2).empty());
  EXPECT_TRUE(terracini_candidates({1, 1, 1}, 4, 5).empty());
}

TEST(Candidates, EveryChoiceRechecksAgainstCounting) {
  for (Degree d = 1; d <= 40; ++d) {
    for (std::int64_t r = 1; r <= plane123::s(d) / 3 + 1; ++r) {
      for (const auto& ch : terracini_candidates(kP123, d, r)) {
        EXPECT_TRUE(terracini_choice_holds(kP123, d, r, ch));
      }
    }
  }
  for (const auto& ch : terracini_candidates({1, 3, 4, 5}, 20, 9)) {
    EXPECT_TRUE(terracini_choice_holds({1, 3, 4, 5}, 20, 9, ch));
  }
}

TEST(Candidates, PreferenceOrder) {
  const auto c = terracini_candidates(kP123, 30, 30);
  for (std::size_t i = 1; i < c.size(); ++i) {
    EXPECT_TRUE(c[i - 1].weight > c[i].weight || (c[i - 1].weight == c[i].weight && c[i - 1].q < c[i].q));
  }
}

TEST(Chandler, KnownStages) {
  const auto top = chandler_inequality(kP123, 14, 2, 4, 8);
  EXPECT_TRUE(top.holds);
  EXPECT_EQ(top.lhs, 16);
  EXPECT_EQ(top.rhs, 16);
  const auto mid = chandler_inequality(kP123, 8, 2, 3, 5);
  EXPECT_TRUE(mid.holds);
  EXPECT_TRUE(chandler_inequality(kP123, 14, 2, 0, 8).holds);
}

TEST(Teranum, Scans) {
  EXPECT_TRUE(teranum_verify(6, 20000).passed());
  EXPECT_TRUE(numeric_facts_verify(6, 20000).passed());
  EXPECT_THROW(teranum_verify(5, 10), std::invalid_argument);
}

TEST(Teranum, NumericFactsSmallValues) {
  EXPECT_LT(plane123::s3(6), 2 * plane123::s(3));
  EXPECT_EQ(plane123::s3(6), 4);
  EXPECT_EQ(plane123::s(3), 3);
  EXPECT_EQ(plane123::s3(8), 5);
  EXPECT_EQ(plane123::s(5), 5);
}

TEST(Certificate, TwoStageTreeAtFourteen) {
  const auto c = build_certificate(kP123, 14, 8);
  EXPECT_EQ(c.kind, Certificate::Kind::terracini);
  ASSERT_TRUE(c.choice);
  EXPECT_EQ(c.choice->weight, 3);
  EXPECT_EQ(c.choice->q, 4);
  ASSERT_EQ(c.children.size(), 3u);
  EXPECT_EQ(c.children[0].kind, Certificate::Kind::chandler_leaf);
  const auto& next = c.children[1];
  EXPECT_EQ(next.d, 11);
  EXPECT_EQ(next.r, 5);
  ASSERT_TRUE(next.choice);
  EXPECT_EQ(next.choice->weight, 3);
  EXPECT_EQ(next.choice->q, 3);
  EXPECT_TRUE(check_certificate(c).ok);
}

TEST(Certificate, BaseNodes) {
  const auto c = build_certificate(kP123, 3, 1);
  EXPECT_EQ(c.kind, Certificate::Kind::base);
  EXPECT_EQ(c.node_count(), 1u);
  EXPECT_TRUE(check_certificate(c).ok);
  const auto z = build_certificate(kP123, 0, 0);
  EXPECT_TRUE(check_certificate(z).ok);
}

TEST(Certificate, PerturbedChoiceIsRejected) {
  auto c = build_certificate(kP123, 14, 8);
  c.choice->q = 5;
  const auto res = check_certificate(c);
  EXPECT_FALSE(res.ok);
  EXPECT_EQ(res.path, "root");
}

TEST(Certificate, JsonRoundTripIsByteExact) {
  const auto c = build_certificate(kP123, 20, bracket_points(20, 100));
  const auto j = to_json(c);
  const auto back = certificate_from_json(nlohmann::json::parse(j.dump()));
  EXPECT_EQ(to_json(back).dump(), j.dump());
  EXPECT_TRUE(check_certificate(back).ok);
}

TEST(Certificate, MalformedJson) {
  EXPECT_THROW(certificate_from_json(nlohmann::json::parse(R"({"kind":"base"})")), VerificationFailure);
  EXPECT_THROW(certificate_from_json(nlohmann::json::parse(
                   R"({"kind":"leaf","weights":[1,2,3],"d":1,"r":1,"witnesses":{},"children":[]})")),
               VerificationFailure);
}

TEST(Certificate, TamperedWitnessIsRejected) {
  auto j = to_json(build_certificate(kP123, 14, 8));
  j["children"][1]["witnesses"]["s_d"] = 17;
  const auto res = check_certificate(certificate_from_json(j));
  EXPECT_FALSE(res.ok);
  EXPECT_EQ(res.path, "root/1");
}

TEST(Certificate, BothBracketValuesUpToThirty) {
  for (Degree d = 0; d <= 30; ++d) {
    const std::int64_t s = plane123::s(d);
    for (std::int64_t r : {s / 3, (s + 2) / 3}) {
      const auto c = build_certificate(kP123, d, r);
      const auto res = check_certificate(c);
      EXPECT_TRUE(res.ok) << "d=" << d << " r=" << r << " " << res.path << ": " << res.reason;
      if (r > 0) {
        EXPECT_TRUE(hilbert_fat_points(FatPointConfig::double_points(kP123, static_cast<std::size_t>(r)), d).is_ah);
      }
    }
  }
}

TEST(Certificate, OtherWeightsUnsupported) {
  EXPECT_THROW(build_certificate({1, 1, 1}, 4, 5), UnsupportedWeights);
}

TEST(Trace, OtherWeightsReportObligationsOrFailure) {
  const auto bad = terracini_trace({1, 1, 1}, 4, 5);
  EXPECT_FALSE(bad.ok());
  EXPECT_EQ(hilbert_fat_points(FatPointConfig::double_points({1, 1, 1}, 5), 4).deficiency, 1u);
  const auto good = terracini_trace({1, 1, 1}, 6, 7);
  EXPECT_TRUE(good.ok());
  EXPECT_EQ(good.obligations.size(), 2u);
}

TEST(Bracket, Values) {
  EXPECT_EQ(bracket_points(14, 8), 8);
  EXPECT_EQ(bracket_points(14, 3), 8);
  EXPECT_EQ(bracket_points(13, 2), 7);
  EXPECT_EQ(bracket_points(13, 20), 7);
}
