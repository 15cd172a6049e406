#include <gtest/gtest.h>

#include "mvstate/gamma_xi.hpp"

namespace mvstate {
namespace {

FiniteMvAlgebra M(std::initializer_list<Integer> k) { return FiniteMvAlgebra(IntVector(k)); }
GoodSequence seq(const FiniteMvAlgebra& A, std::vector<MvElement> e) { return make_good_sequence(A, std::move(e)); }

// Every good sequence over A with at most `len` entries.
std::vector<GoodSequence> all_good_sequences(const FiniteMvAlgebra& A, std::size_t len) {
  std::vector<GoodSequence> out{GoodSequence{A, {}}};
  std::vector<std::vector<MvElement>> layer{{}};
  for (std::size_t l = 1; l <= len; ++l) {
    std::vector<std::vector<MvElement>> next;
    for (const auto& prefix : layer)
      for (const auto& a : A.elements()) {
        if (a == A.zero()) continue;
        auto s = prefix;
        s.push_back(a);
        if (is_good_sequence(A, s)) {
          out.push_back(GoodSequence{A, s});
          next.push_back(std::move(s));
        }
      }
    layer = std::move(next);
  }
  return out;
}

TEST(GoodSequence, Recognition) {
  EXPECT_TRUE(is_good_sequence(M({2}), {{2}, {1}}));
  EXPECT_FALSE(is_good_sequence(M({2}), {{1}, {1}}));
  EXPECT_TRUE(is_good_sequence(M({2}), {}));
  EXPECT_TRUE(is_good_sequence(M({2}), {{2}, {0}, {0}}));
  EXPECT_THROW(is_good_sequence(M({2}), {{1, 1}}), DimensionMismatch);
  EXPECT_THROW(make_good_sequence(M({2}), {{1}, {1}}), InputError);
}

TEST(GoodSequence, TrailingZerosAreTrimmed) {
  EXPECT_EQ(seq(M({2}), {{2}, {1}, {0}}), seq(M({2}), {{2}, {1}}));
}

TEST(GoodSeqAdd, Examples) {
  const auto A = M({2});
  EXPECT_EQ(good_seq_add(seq(A, {{1}}), seq(A, {{1}})), seq(A, {{2}}));
  EXPECT_EQ(good_seq_add(seq(A, {{2}}), seq(A, {{1}})), seq(A, {{2}, {1}}));
  const auto B = M({2, 3});
  const auto s = seq(B, {{2, 3}, {1, 2}});
  EXPECT_EQ(good_seq_add(s, GoodSequence{B, {}}), s);
}

TEST(GoodSeqAdd, RejectsBadOperands) {
  const auto A = M({2});
  GoodSequence bad{A, {{1}, {1}}};
  EXPECT_THROW(good_seq_add(bad, seq(A, {})), InputError);
  EXPECT_THROW(good_seq_add(seq(A, {}), seq(M({3}), {})), DimensionMismatch);
}

TEST(GoodSeqAdd, CommutativeMonoidOnSmallChains) {
  for (const auto& A : {M({2}), M({3})}) {
    const auto all = all_good_sequences(A, 3);
    const GoodSequence zero{A, {}};
    for (const auto& s : all) {
      EXPECT_EQ(good_seq_add(s, zero), s);
      for (const auto& t : all) {
        const auto st = good_seq_add(s, t);
        ASSERT_EQ(st, good_seq_add(t, s));
        ASSERT_TRUE(is_good_sequence(A, st.entries));
        for (const auto& u : all) ASSERT_EQ(good_seq_add(st, u), good_seq_add(s, good_seq_add(t, u)));
      }
    }
  }
}

TEST(GoodSeqAdd, AgreesWithIntegerAddition) {
  // The entry-sum map is a monoid isomorphism onto nonnegative vectors.
  for (const auto& A : {M({2}), M({3}), M({1, 2}), M({2, 2})}) {
    const auto all = all_good_sequences(A, 3);
    for (const auto& s : all)
      for (const auto& t : all) {
        IntVector expected = sum_entries(s);
        const IntVector b = sum_entries(t);
        for (std::size_t i = 0; i < expected.size(); ++i) expected[i] += b[i];
        ASSERT_EQ(sum_entries(good_seq_add(s, t)), expected);
      }
    // and it is injective: distinct sequences have distinct sums
    std::set<IntVector> sums;
    for (const auto& s : all) sums.insert(sum_entries(s));
    EXPECT_EQ(sums.size(), all.size());
  }
}

TEST(GDecompose, Examples) {
  EXPECT_EQ(g_decompose(M({2}), {3}), seq(M({2}), {{2}, {1}}));
  EXPECT_TRUE(g_decompose(M({2, 3}), {0, 0}).empty());
  EXPECT_EQ(g_decompose(M({1, 2}), {1, 3}), seq(M({1, 2}), {{1, 2}, {0, 1}}));
  EXPECT_THROW(g_decompose(M({2}), {-1}), InputError);
}

TEST(GDecompose, IsInverseToEntrySum) {
  const auto A = M({2, 3, 1});
  for (Integer a = 0; a <= 7; ++a)
    for (Integer b = 0; b <= 7; ++b)
      for (Integer c = 0; c <= 7; ++c) {
        const auto s = g_decompose(A, {a, b, c});
        ASSERT_TRUE(is_good_sequence(A, s.entries));
        ASSERT_EQ(sum_entries(s), IntVector({a, b, c}));
      }
}

TEST(Phi, Examples) {
  const auto p = phi(M({2}), {1});
  EXPECT_EQ(p.pos, seq(M({2}), {{1}}));
  EXPECT_TRUE(p.neg.empty());
  EXPECT_EQ(canonicalize(p).vector, IntVector({1}));
  const auto z = phi(M({2}), {0});
  EXPECT_TRUE(z.pos.empty() && z.neg.empty());
  EXPECT_EQ(phi_vector(M({2, 3}), {1, 1}).vector, IntVector({1, 1}));
}

TEST(Epsilon, Examples) {
  const auto e = epsilon(M({2}), {3});
  EXPECT_EQ(e.pos, seq(M({2}), {{2}, {1}}));
  EXPECT_TRUE(e.neg.empty());
  const auto z = epsilon(M({2}), {0});
  EXPECT_TRUE(z.pos.empty() && z.neg.empty());
  const auto m = epsilon(M({1, 1}), {1, -1});
  EXPECT_EQ(m.pos, seq(M({1, 1}), {{1, 0}}));
  EXPECT_EQ(m.neg, seq(M({1, 1}), {{0, 1}}));
}

TEST(RoundTrips, PhiThenGamma) {
  for (const auto& A : {M({1}), M({2}), M({7}), M({2, 3}), M({1, 1, 1}), M({4, 4, 4}), M({199})}) {
    const auto G = gamma_of(A.unit());
    EXPECT_EQ(G, A);
    for (const auto& a : A.elements()) ASSERT_EQ(gamma_element(G, canonicalize(phi(A, a))), a);
  }
}

TEST(RoundTrips, EpsilonThenSum) {
  const auto A = M({2, 3});
  for (Integer x = -10; x <= 10; ++x)
    for (Integer y = -10; y <= 10; ++y) ASSERT_EQ(canonicalize(epsilon(A, {x, y})).vector, IntVector({x, y}));
}

TEST(XiEqual, Examples) {
  const auto A = M({2});
  const GoodSequence empty{A, {}};
  EXPECT_TRUE(xi_equal(XiPair{seq(A, {{1}}), empty}, XiPair{seq(A, {{2}}), seq(A, {{1}})}));
  const auto x = seq(A, {{2}, {1}});
  EXPECT_TRUE(xi_equal(XiPair{x, x}, XiPair{empty, empty}));
  EXPECT_FALSE(xi_equal(XiPair{seq(A, {{2}}), empty}, XiPair{seq(A, {{1}}), empty}));
  EXPECT_THROW(xi_equal(XiPair{empty, empty}, XiPair{GoodSequence{M({3}), {}}, GoodSequence{M({3}), {}}}),
               DimensionMismatch);
}

TEST(XiEqual, CrossAdditionAgreesWithVectors) {
  const auto A = M({2});
  const auto all = all_good_sequences(A, 2);
  for (const auto& a : all)
    for (const auto& b : all)
      for (const auto& c : all)
        for (const auto& d : all) {
          const XiPair x{a, b}, y{c, d};
          ASSERT_EQ(xi_equal(x, y), canonicalize(x) == canonicalize(y));
          ASSERT_EQ(xi_equal(x, y), xi_equal(XiElement{canonicalize(x)}, XiElement{y}));
        }
}

TEST(XiArithmetic, GroupOperations) {
  const auto A = M({2, 1});
  const XiPair x = epsilon(A, {3, -2}), y = epsilon(A, {-1, 4});
  EXPECT_EQ(canonicalize(xi_add(x, y)).vector, IntVector({2, 2}));
  EXPECT_EQ(canonicalize(xi_negate(x)).vector, IntVector({-3, 2}));
  const XiVector u{{3, -2}, {2, 1}}, v{{-1, 4}, {2, 1}};
  EXPECT_EQ(xi_meet(u, v).vector, IntVector({-1, -2}));
  EXPECT_EQ(xi_join(u, v).vector, IntVector({3, 4}));
  EXPECT_TRUE(xi_leq(xi_meet(u, v), u));
  EXPECT_EQ(xi_sub(xi_add(u, v), v), u);
}

TEST(GammaOf, Examples) {
  EXPECT_EQ(gamma_of({2}), M({2}));
  EXPECT_EQ(gamma_of({1, 1}), M({1, 1}));
  EXPECT_EQ(gamma_of({2, 3}), M({2, 3}));
  EXPECT_THROW(gamma_of({2, 0}), InputError);
}

}  // namespace
}  // namespace mvstate
