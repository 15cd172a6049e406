#include <gtest/gtest.h>

#include "corpora.hpp"
#include "mvstate/geometry.hpp"
#include "oracles.hpp"

namespace mvstate {
namespace {

RationalPoint P(std::initializer_list<Rational> c) { return RationalPoint(RatVector(c)); }
Rational R(Integer p, Integer q = 1) { return Rational(p, q); }

TEST(Den, Examples) {
  EXPECT_EQ(den(P({R(1, 2), R(1, 3)})), 6);
  EXPECT_EQ(den(P({R(0), R(0)})), 1);
  EXPECT_EQ(den(P({R(2, 4), R(-3, 9)})), 6);
  for (Integer k = 1; k <= 12; ++k)
    for (std::size_t n = 1; n <= 4; ++n)
      for (std::size_t i = 0; i < n; ++i) {
        RatVector c(n, R(0));
        c[i] = R(1, k);
        EXPECT_EQ(den(RationalPoint(c)), k);
      }
}

TEST(Simplex, MembershipIsExact) {
  const RationalSimplex s({P({R(0), R(0)}), P({R(1), R(0)}), P({R(0), R(1)})});
  EXPECT_TRUE(s.contains(P({R(1, 3), R(2, 3)})));
  EXPECT_FALSE(s.in_relative_interior(P({R(1, 3), R(2, 3)})));
  EXPECT_TRUE(s.in_relative_interior(P({R(1, 3), R(1, 3)})));
  EXPECT_FALSE(s.contains(P({R(2, 3), R(2, 3)})));
  const RationalSimplex seg({P({R(0), R(0)}), P({R(1), R(1)})});
  EXPECT_FALSE(seg.contains(P({R(1, 2), R(1, 3)})));
  EXPECT_EQ(*seg.barycentric(P({R(1, 4), R(1, 4)})), (RatVector{R(3, 4), R(1, 4)}));
}

TEST(Simplex, RejectsDegenerateVertexSets) {
  EXPECT_THROW(RationalSimplex({P({R(0)}), P({R(1)}), P({R(1, 2)})}), DegenerateSimplex);
  EXPECT_THROW(RationalSimplex({P({R(1, 2), R(1, 2)}), P({R(1, 2), R(1, 2)})}), DegenerateSimplex);
  EXPECT_THROW(RationalSimplex({P({R(0)}), P({R(1), R(0)})}), DimensionMismatch);
  EXPECT_THROW(RationalSimplex(std::vector<RationalPoint>{}), DegenerateSimplex);
}

TEST(Regular, Examples) {
  EXPECT_TRUE(is_regular_simplex(delta_k({1, 1})));
  EXPECT_TRUE(is_regular_simplex(RationalSimplex({P({R(0)}), P({R(1)})})));
  EXPECT_FALSE(is_regular_simplex(RationalSimplex({P({R(1, 3)}), P({R(2, 3)})})));
  // a full-dimensional triangle of area 1/2 is unimodular, one of area 1 is not
  EXPECT_TRUE(is_regular_simplex(RationalSimplex({P({R(0), R(0)}), P({R(1), R(0)}), P({R(0), R(1)})})));
  EXPECT_FALSE(is_regular_simplex(RationalSimplex({P({R(0), R(0)}), P({R(2), R(0)}), P({R(0), R(1)})})));
}

TEST(Regular, OracleRecognisesTheExamples) {
  EXPECT_TRUE(oracle::regular_by_definition(RationalSimplex({P({R(0)}), P({R(1)})})));
  EXPECT_FALSE(oracle::regular_by_definition(RationalSimplex({P({R(1, 3)}), P({R(2, 3)})})));
  EXPECT_TRUE(oracle::regular_by_definition(delta_k({2, 3})));
}

TEST(Regular, AgreesWithDefinitionOnSeededCorpus) {
  const auto corpus = corpus::small_simplices(300, 2024);
  std::size_t irregular = 0;
  for (const auto& s : corpus) {
    const bool fast = is_regular_simplex(s);
    ASSERT_EQ(fast, oracle::regular_by_definition(s));
    if (!fast) ++irregular;
  }
  EXPECT_GE(irregular, 20u);
  EXPECT_LE(irregular, corpus.size() - 20);
}

TEST(DeltaK, Examples) {
  EXPECT_EQ(delta_k({1, 1}).vertices(), (std::vector<RationalPoint>{P({R(1), R(0)}), P({R(0), R(1)})}));
  EXPECT_EQ(delta_k({2}).vertices(), (std::vector<RationalPoint>{P({R(1, 2)})}));
  EXPECT_EQ(delta_k({2, 3}).vertices(), (std::vector<RationalPoint>{P({R(1, 2), R(0)}), P({R(0), R(1, 3)})}));
  EXPECT_THROW(delta_k({}), InputError);
  EXPECT_THROW(delta_k({2, 0}), InputError);
}

TEST(DeltaK, AlwaysRegularAndPointsSatisfyPartitionOfUnity) {
  for (const auto& k : corpus::delta_parameters(4, 5)) {
    ASSERT_TRUE(is_regular_simplex(delta_k(k)));
    for (Integer t : {1, 6, 12})
      for (const auto& x : points_with_denominator_dividing(k, t)) {
        Rational total(0);
        for (std::size_t i = 0; i < k.size(); ++i) {
          ASSERT_GE(x.coords[i], 0);
          total += k[i] * x.coords[i];
        }
        ASSERT_EQ(total, Rational(1));
        ASSERT_EQ(t % den(x), 0);
      }
  }
}

TEST(DeltaK, SmallOnesAgreeWithOracle) {
  for (const auto& k : corpus::delta_parameters(3, 4)) ASSERT_TRUE(oracle::regular_by_definition(delta_k(k)));
}

TEST(Points, Examples) {
  EXPECT_EQ(points_with_denominator_dividing({1, 1}, 2),
            (std::vector<RationalPoint>{P({R(0), R(1)}), P({R(1, 2), R(1, 2)}), P({R(1), R(0)})}));
  EXPECT_TRUE(points_with_denominator_dividing({2}, 3).empty());
  EXPECT_EQ(points_with_denominator_dividing({2}, 2), (std::vector<RationalPoint>{P({R(1, 2)})}));
  EXPECT_THROW(points_with_denominator_dividing({2}, 0), InputError);
}

TEST(Points, CountsAreCompositions) {
  for (std::size_t n = 1; n <= 4; ++n)
    for (Integer t = 1; t <= 6; ++t) {
      const auto pts = points_with_denominator_dividing(IntVector(n, 1), t);
      ASSERT_EQ(pts.size(), oracle::count_compositions_brute(n, t));
      ASSERT_EQ(pts.size(), oracle::binomial(static_cast<std::uint64_t>(t) + n - 1, n - 1));
      ASSERT_TRUE(std::is_sorted(pts.begin(), pts.end()));
    }
  for (const auto& k : corpus::delta_parameters(3, 4))
    for (Integer t = 1; t <= 12; ++t)
      ASSERT_EQ(points_with_denominator_dividing(k, t).size(), oracle::count_weighted_compositions(k, t));
}

TEST(ApplyAffine, Examples) {
  const RationalSimplex unit({P({R(0)}), P({R(1)})});
  const auto flip = make_affine_map({{-1}}, {1}, unit);
  const auto y = apply_affine(flip, P({R(1, 3)}));
  EXPECT_EQ(y, P({R(2, 3)}));
  EXPECT_EQ(den(y), 3);
  const auto f = make_affine_map({{1, 3}}, {0}, delta_k({2, 6}));
  EXPECT_EQ(apply_affine(f, P({R(0), R(1, 6)})), P({R(1, 2)}));
  const auto id = make_affine_map({{1, 0}, {0, 1}}, {0, 0}, delta_k({2, 3}));
  EXPECT_EQ(apply_affine(id, P({R(1, 4), R(1, 6)})), P({R(1, 4), R(1, 6)}));
  EXPECT_THROW(apply_affine(flip, P({R(3, 2)})), OutsideDomain);
  EXPECT_THROW(apply_affine(f, P({R(1, 2), R(1, 6)})), OutsideDomain);
  EXPECT_THROW(make_affine_map({{1, 0}}, {0}, unit), DimensionMismatch);
}

TEST(ApplyAffine, DenominatorDivides) {
  for (const auto& [f, x] : corpus::affine_samples(1000, 68)) {
    const auto y = apply_affine(f, x);
    ASSERT_EQ(den(x) % den(y), 0);
  }
}

TEST(AffineExtension, Examples) {
  const auto c = affine_extension(delta_k({1, 1}), {P({R(1)}), P({R(1)})});
  EXPECT_EQ(c.matrix, (IntMatrix{{1, 1}}));
  EXPECT_EQ(c.offset, IntVector({0}));
  const auto id = affine_extension(delta_k({2, 3}), delta_k({2, 3}).vertices());
  EXPECT_EQ(id.matrix, (IntMatrix{{1, 0}, {0, 1}}));
  EXPECT_EQ(id.offset, IntVector({0, 0}));
  const auto f = affine_extension(delta_k({2, 6}), {P({R(1, 2)}), P({R(1, 2)})});
  EXPECT_EQ(f.matrix, (IntMatrix{{1, 3}}));
  EXPECT_EQ(apply_affine(f, P({R(1, 4), R(1, 12)})), P({R(1, 2)}));
}

TEST(AffineExtension, NonIntegralIsReported) {
  try {
    affine_extension(delta_k({1, 1}), {P({R(1, 2)}), P({R(1)})});
    FAIL();
  } catch (const NonIntegerAffineExtension& e) {
    EXPECT_EQ(e.matrix()[0][0], R(1, 2));
  }
  const RationalSimplex unit({P({R(0)}), P({R(1)})});
  EXPECT_THROW(affine_extension(unit, {P({R(0)}), P({R(1, 2)})}), NonIntegerAffineExtension);
  EXPECT_THROW(affine_extension(unit, {P({R(0)})}), DimensionMismatch);
}

TEST(AffineExtension, ReproducesVertexImages) {
  for (const auto& [f, x] : corpus::affine_samples(200, 5)) {
    std::vector<RationalPoint> images;
    for (const auto& v : f.domain.vertices()) images.push_back(f.evaluate(v));
    const auto g = affine_extension(f.domain, images);
    EXPECT_EQ(g.matrix, f.matrix);
    EXPECT_EQ(g.offset, f.offset);
    for (std::size_t i = 0; i < images.size(); ++i) ASSERT_EQ(g.evaluate(f.domain.vertices()[i]), images[i]);
  }
}

TEST(Surjective, Examples) {
  const auto c = affine_extension(delta_k({1, 1}), {P({R(1)}), P({R(1)})});
  EXPECT_TRUE(is_surjective_onto_simplex(c, delta_k({1})));
  const auto embed = make_affine_map({{1}, {0}}, {0, 0}, delta_k({1}));
  EXPECT_FALSE(is_surjective_onto_simplex(embed, delta_k({1, 1})));
  const auto id = make_affine_map({{1, 0}, {0, 1}}, {0, 0}, delta_k({2, 3}));
  EXPECT_TRUE(is_surjective_onto_simplex(id, delta_k({2, 3})));
  EXPECT_THROW(is_surjective_onto_simplex(id, delta_k({1, 1})), OutsideDomain);
}

}  // namespace
}  // namespace mvstate
