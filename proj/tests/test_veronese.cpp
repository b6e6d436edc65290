#include <gtest/gtest.h>

#include <random>

#include "wps/error.hpp"
#include "wps/ideals.hpp"
#include "wps/veronese.hpp"

using namespace wps;

TEST(Chart, Preconditions) {
  EXPECT_THROW(VeroneseChart(Weights{1, 2, 3}, 2), DomainError);
  EXPECT_THROW(VeroneseChart(Weights{2, 3}, 6), UnsupportedWeights);
  const VeroneseChart ch(Weights{1, 2, 3}, 6);
  EXPECT_EQ(ch.size(), 7u);
  EXPECT_EQ(ch.basis(), enumerate_monomials({1, 2, 3}, 6));
}

TEST(Image, Substitution) {
  const VeroneseChart ch(Weights{1, 2, 3}, 3);
  EXPECT_EQ(veronese_image(ch, WeightedPoint(Weights{1, 2, 3}, {1, 4, 8})),
            (std::vector<mpq_class>{1, 4, 8}));
  EXPECT_EQ(veronese_image(ch, WeightedPoint(Weights{1, 2, 3}, {1, 0, 0})),
            (std::vector<mpq_class>{1, 0, 0}));
  const VeroneseChart line(Weights{1, 2}, 2);
  EXPECT_EQ(veronese_image(line, WeightedPoint(Weights{1, 2}, {1, 7})), (std::vector<mpq_class>{1, 7}));
  EXPECT_THROW(veronese_image(ch, WeightedPoint(Weights{1, 2, 3}, {0, 1, 1})), DomainError);
}

TEST(Image, EquivariantUnderScaling) {
  const Weights w{1, 2, 3};
  const VeroneseChart ch(w, 7);
  const WeightedPoint p(w, {2, 3, 5});
  const mpq_class lambda(3, 7);
  const auto a = veronese_image(ch, p), b = veronese_image(ch, p.scaled(lambda));
  mpq_class ld = 1;
  for (int i = 0; i < 7; ++i) ld *= lambda;
  for (std::size_t k = 0; k < a.size(); ++k) EXPECT_EQ(b[k], a[k] * ld);
}

TEST(Jacobian, DegreeThree) {
  const VeroneseChart ch(Weights{1, 2, 3}, 3);
  const auto J = tangent_jacobian(ch, WeightedPoint(Weights{1, 2, 3}, {1, 5, 7}));
  const long ref[3][3] = {{3, 5, 0}, {0, 1, 0}, {0, 0, 1}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) EXPECT_EQ(J(i, j), ref[i][j]);
}

TEST(Jacobian, OneVariable) {
  const VeroneseChart ch(Weights{1}, 5);
  const auto J = tangent_jacobian(ch, WeightedPoint(Weights{1}, {2}));
  ASSERT_EQ(J.rows(), 1u);
  ASSERT_EQ(J.cols(), 1u);
  EXPECT_EQ(J(0, 0), 5 * 16);
  EXPECT_EQ(rank(RationalField{}, J), 1u);
}

TEST(Jacobian, KernelFormsAreSingularAtThePoint) {
  std::mt19937 gen(5);
  std::uniform_int_distribution<long> coord(1, 9);
  for (const Weights& w : {Weights{1, 2, 3}, Weights{1, 1, 2}, Weights{1, 3, 4, 5}}) {
    const VeroneseChart ch(w, 9);
    for (int t = 0; t < 5; ++t) {
      std::vector<mpq_class> c(w.size());
      c[0] = 1;
      for (std::size_t i = 1; i < c.size(); ++i) c[i] = coord(gen);
      const WeightedPoint p(w, c);
      for (const auto& f : nullspace(tangent_jacobian(ch, p))) {
        SparsePoly poly(w);
        for (std::size_t k = 0; k < f.size(); ++k) poly.add_term(ch.basis()[k].exponents, f[k]);
        EXPECT_EQ(poly.evaluate(p), 0);
        for (std::size_t j = 0; j < w.size(); ++j) EXPECT_EQ(poly.derivative(j).evaluate(p), 0);
      }
    }
  }
}

TEST(Secant, KnownDimensions) {
  EXPECT_EQ(secant_dimension(VeroneseChart(Weights{1, 2, 3}, 6), 2, {}).computed_dim, 5);
  for (const Weights& w : {Weights{1, 2, 3}, Weights{1, 1, 1, 1}, Weights{1, 4, 57}}) {
    const auto r = secant_dimension(VeroneseChart(w, w.max() + 2), 1, {});
    EXPECT_EQ(r.computed_dim, static_cast<std::int64_t>(w.dimension()));
  }
  const auto ex = secant_dimension(VeroneseChart(Weights{1, 1, 1}, 4), 5, {});
  EXPECT_EQ(ex.computed_dim, 13);
  EXPECT_EQ(ex.expected_dim, 14);
  EXPECT_EQ(ex.defect, 1);
  EXPECT_TRUE(ex.defective_in_all_trials);
  EXPECT_EQ(ex.trials, 3);
}

TEST(Secant, MatchesDoublePointRank) {
  for (const Weights& w : {Weights{1, 2, 3}, Weights{1, 5, 9}, Weights{1, 1, 2, 3}}) {
    for (Degree d = w.max(); d <= 12; ++d) {
      for (std::int64_t r = 1; r <= 6; ++r) {
        const auto s = secant_dimension(VeroneseChart(w, d), r, {});
        const auto p = hilbert_fat_points(FatPointConfig::double_points(w, static_cast<std::size_t>(r)), d);
        EXPECT_EQ(s.computed_dim + 1, static_cast<std::int64_t>(p.actual)) << w.to_string() << " d=" << d << " r=" << r;
      }
    }
  }
}

TEST(Secant, ExplicitPoints) {
  const Weights w{1, 2, 3};
  const VeroneseChart ch(w, 6);
  EXPECT_EQ(secant_dimension_at(ch, {WeightedPoint(w, {1, 2, 3}), WeightedPoint(w, {1, 5, 7})}), 5);
  // a repeated point spans only one tangent space
  EXPECT_EQ(secant_dimension_at(ch, {WeightedPoint(w, {1, 2, 3}), WeightedPoint(w, {1, 2, 3})}), 2);
}
