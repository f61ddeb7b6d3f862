#include <gtest/gtest.h>

#include <random>

#include "fideal/enumeration.hpp"
#include "fideal/error.hpp"
#include "fideal/invariants.hpp"
#include "fideal/json_io.hpp"
#include "oracles.hpp"

namespace fideal {
namespace {

using Subsets = std::vector<VertexSubset>;

FVector fv(std::initializer_list<std::uint64_t> c) { return FVector(std::vector<std::uint64_t>(c)); }

TEST(MinimalVertexCoversTest, Examples) {
  const auto a = minimal_vertex_covers(parse_ideal("n=3; x1*x2, x2*x3"));
  EXPECT_EQ(a.covers, (Subsets{{2}, {1, 3}}));
  EXPECT_EQ(a.height, 1);
  EXPECT_FALSE(a.unmixed);

  const auto b = minimal_vertex_covers(parse_ideal("n=4; x1*x2, x2*x3, x3*x4"));
  EXPECT_EQ(b.covers, (Subsets{{1, 3}, {2, 3}, {2, 4}}));
  EXPECT_EQ(b.height, 2);
  EXPECT_TRUE(b.unmixed);

  const auto c = minimal_vertex_covers(parse_ideal("n=4; x1*x2, x1*x3, x1*x4"));
  EXPECT_EQ(c.covers, (Subsets{{1}, {2, 3, 4}}));
  EXPECT_EQ(c.height, 1);
  EXPECT_FALSE(c.unmixed);
}

TEST(HeightTest, Examples) {
  EXPECT_EQ(height(parse_ideal("n=3; x1*x2, x2*x3")), 1);
  EXPECT_EQ(height(parse_ideal("n=4; x1*x2, x2*x3, x3*x4")), 2);
  EXPECT_EQ(height(parse_ideal("n=2; x1*x2")), 1);
}

TEST(HeightTest, AgreesWithOracleAndNonfaceDimension) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 10);
    const auto ideal = oracle::random_ideal(rng, n, 8);
    const int h = height(ideal);
    EXPECT_EQ(h, oracle::height(oracle::masks_of(ideal.generators()), n));
    EXPECT_EQ(h + 1 + dimension(nonface_complex(ideal)), n);
  }
}

TEST(BinomialTest, Values) {
  EXPECT_EQ(binomial(3, 2), 3u);
  EXPECT_EQ(binomial(7, 2), 21u);
  EXPECT_EQ(binomial(5, 0), 1u);
  EXPECT_EQ(binomial(2, 3), 0u);
  EXPECT_EQ(binomial(62, 31), 465428353255261088u);
}

TEST(LemmaBinomialTest, Examples) {
  EXPECT_TRUE(check_lemma_binomial(parse_ideal("n=3; x1*x2, x2*x3")));
  EXPECT_TRUE(check_lemma_binomial(parse_ideal("n=4; x1*x2, x2*x3, x3*x4")));
  EXPECT_TRUE(check_lemma_binomial(parse_ideal("n=3; x1*x2*x3")));
  try {
    check_lemma_binomial(parse_ideal("n=4; x2*x3, x2*x4, x3*x4"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotPure);
  }
}

TEST(LemmaBinomialTest, RandomPureIdeals) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 5);
    const int d = 2 + static_cast<int>(rng() % static_cast<unsigned>(n - 2));
    EXPECT_TRUE(check_lemma_binomial(oracle::random_pure_ideal(rng, n, d)));
  }
}

TEST(LemmaDimensionTest, Examples) {
  const auto a = parse_ideal("n=3; x1*x2, x2*x3");
  EXPECT_EQ(dimension(facet_complex(a)), 1);
  EXPECT_EQ(dimension(nonface_complex(a)), 1);
  EXPECT_TRUE(check_lemma_dimension(a));

  const auto star = parse_ideal("n=4; x1*x2, x1*x3, x1*x4");
  EXPECT_EQ(dimension(facet_complex(star)), 1);
  EXPECT_EQ(dimension(nonface_complex(star)), 2);
  EXPECT_NE(height(star) + stats(star).degree, 4);
  EXPECT_TRUE(check_lemma_dimension(star));
}

TEST(LemmaDimensionTest, RandomIdeals) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 8);
    EXPECT_TRUE(check_lemma_dimension(oracle::random_ideal(rng, n, 6)));
  }
}

TEST(IsFIdealTest, Examples) {
  const auto path = is_f_ideal(parse_ideal("n=4; x1*x2, x2*x3, x3*x4"));
  EXPECT_TRUE(path.f_ideal);
  EXPECT_EQ(path.f_facet, fv({4, 3}));
  EXPECT_EQ(path.f_nonface, fv({4, 3}));

  const auto two_edges = is_f_ideal(parse_ideal("n=3; x1*x2, x2*x3"));
  EXPECT_FALSE(two_edges.f_ideal);
  EXPECT_EQ(two_edges.f_facet, fv({3, 2}));
  EXPECT_EQ(two_edges.f_nonface, fv({3, 1}));

  const auto triangle = is_f_ideal(parse_ideal("n=4; x2*x3, x2*x4, x3*x4"));
  EXPECT_FALSE(triangle.f_ideal);
  EXPECT_EQ(triangle.f_facet, fv({3, 3}));
  EXPECT_EQ(triangle.f_nonface, fv({4, 3}));
}

TEST(TheoremClassifyTest, Examples) {
  const auto path = theorem_classify(parse_ideal("n=4; x1*x2, x2*x3, x3*x4"));
  EXPECT_TRUE(path.pure_degree2);
  EXPECT_EQ(path.cond_unmixed_height, true);
  EXPECT_EQ(path.cond_binomial_even, true);
  EXPECT_EQ(path.cond_generator_count, true);
  EXPECT_TRUE(path.f_ideal);
  EXPECT_EQ(path.height, 2);
  EXPECT_TRUE(path.unmixed);
  EXPECT_TRUE(path.consistent());

  const auto star = theorem_classify(parse_ideal("n=4; x1*x2, x1*x3, x1*x4"));
  EXPECT_TRUE(star.pure_degree2);
  EXPECT_EQ(star.cond_unmixed_height, false);
  EXPECT_EQ(star.height, 1);
  EXPECT_FALSE(star.f_ideal);
  EXPECT_TRUE(star.consistent());

  const auto pentagon = theorem_classify(parse_ideal("n=5; x1*x2, x2*x3, x3*x4, x4*x5, x1*x5"));
  EXPECT_TRUE(pentagon.pure_degree2);
  EXPECT_EQ(pentagon.cond_unmixed_height, true);
  EXPECT_EQ(pentagon.height, 3);
  EXPECT_EQ(pentagon.cond_binomial_even, true);
  EXPECT_EQ(pentagon.cond_generator_count, true);
  EXPECT_TRUE(pentagon.f_ideal);
  EXPECT_EQ(pentagon.f_facet, fv({5, 5}));
  EXPECT_EQ(pentagon.f_nonface, fv({5, 5}));
}

TEST(TheoremClassifyTest, NonPureInputLeavesConditionsOpen) {
  const auto r = theorem_classify(parse_ideal("n=4; x2*x3, x2*x4, x3*x4"));
  EXPECT_FALSE(r.pure_degree2);
  EXPECT_FALSE(r.cond_unmixed_height.has_value());
  EXPECT_FALSE(r.cond_binomial_even.has_value());
  EXPECT_FALSE(r.cond_generator_count.has_value());
  EXPECT_FALSE(r.f_ideal);
  EXPECT_TRUE(r.consistent());
  EXPECT_EQ(to_json(r).dump(),
            R"({"pure_degree2":false,"cond_i":null,"cond_ii":null,"cond_iii":null,)"
            R"("f_ideal":false,"f_facet":[3,3],"f_nonface":[4,3],"height":2,"unmixed":true})");
}

TEST(TheoremClassifyTest, ReportJson) {
  const auto r = theorem_classify(parse_ideal("n=4; x1*x2, x2*x3, x3*x4"));
  EXPECT_EQ(to_json(r).dump(),
            R"({"pure_degree2":true,"cond_i":true,"cond_ii":true,"cond_iii":true,)"
            R"("f_ideal":true,"f_facet":[4,3],"f_nonface":[4,3],"height":2,"unmixed":true})");
}

TEST(TheoremClassifyTest, ParityCorollary) {
  // C(n,2) is odd for n = 2,3 mod 4, so condition (ii) fails everywhere.
  for (int n : {3, 6}) {
    for_each_pure(n, 2, [&](const Ideal& ideal) {
      const auto r = theorem_classify(ideal);
      ASSERT_EQ(r.cond_binomial_even, false);
      ASSERT_FALSE(r.f_ideal);
    });
  }
}

TEST(TheoremClassifyTest, RandomPureDegreeTwoAtNineVertices) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 2000; ++trial) {
    EXPECT_TRUE(theorem_classify(oracle::random_pure_ideal(rng, 9, 2)).consistent());
  }
}

}  // namespace
}  // namespace fideal
