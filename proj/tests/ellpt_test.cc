#include "cond3/ellpt.h"

#include <gtest/gtest.h>

#include "cond3/chars.h"
#include "cond3/gf2k.h"

namespace cond3 {
namespace {

// Counts projective points by enumerating all (z, w) pairs.
long NaivePoints(Curve c, int m) {
  const GF2Field& F = gf_make(m);
  long n = 1;
  for (u64 z = 0; z <= F.mask(); ++z)
    for (u64 w = 0; w <= F.mask(); ++w) {
      u64 rhs = F.mul(F.sqr(w), w);
      if (c == Curve::kEprime) rhs ^= w;
      n += (F.sqr(z) ^ z) == rhs;
    }
  return n;
}

// Applies the twisted map pointwise on E(F_2^M) and counts fixed points.
long NaiveFixedPoints(const QElem& g, long n, int f, int M) {
  const GF2Field& F = gf_make(M);
  const Embedding& e = embedding(2, M);
  u64 a = e(g.a), ai = F.inv(a);
  u64 b = F.mul(ai, e(g.b)), c = F.mul(ai, e(g.c));
  long inv_frob = M - (f * n) % M;
  long fixed = 1;
  for (u64 z = 0; z <= F.mask(); ++z)
    for (u64 w = 0; w <= F.mask(); ++w) {
      if ((F.sqr(z) ^ z) != F.mul(F.sqr(w), w)) continue;
      u64 zr = F.frob(z, inv_frob), wr = F.frob(w, inv_frob);
      u64 z2 = zr ^ F.mul(b, wr) ^ c;
      u64 w2 = F.mul(a, wr ^ F.sqr(b));
      fixed += z2 == z && w2 == w;
    }
  return fixed;
}

TEST(EllptTest, PointCountsMatchEnumeration) {
  for (int m = 1; m <= 8; ++m) {
    EXPECT_EQ(count_points(Curve::kE, m), NaivePoints(Curve::kE, m)) << m;
    EXPECT_EQ(count_points(Curve::kEprime, m), NaivePoints(Curve::kEprime, m)) << m;
  }
}

TEST(EllptTest, KnownPointCounts) {
  // Supersingular: #E(F_2) = 3, #E(F_4) = 9.
  EXPECT_EQ(count_points(Curve::kE, 1), 3);
  EXPECT_EQ(count_points(Curve::kE, 2), 9);
  EXPECT_EQ(count_points(Curve::kEprime, 1), 5);
}

TEST(EllptTest, CocycleOrderOfIdentity) {
  EXPECT_EQ(cocycle_order({QElem{}, 1, 1}), 1);
  EXPECT_EQ(search_degree({QElem{}, 1, 1}), 2);
  EXPECT_EQ(search_degree({QElem{}, 1, 2}), 2);
}

TEST(EllptTest, FixedPointsMatchPointwiseAction) {
  int compared = 0;
  for (int f : {1, 2})
    for (long n : {1L, 2L})
      for (const QElem& g : q_elements()) {
        TwistedMap t{g, n, f};
        int M = search_degree(t);
        if (M > 8) continue;
        EXPECT_EQ(fixed_point_count(t), NaiveFixedPoints(g, n, f, M)) << f << " " << g.str() << " " << n;
        ++compared;
      }
  EXPECT_GT(compared, 40);
}

TEST(EllptTest, FixedPointsStableUnderLargerSearchField) {
  // Doubling the search degree must not find new fixed points.
  for (const QElem& g : q_elements()) {
    TwistedMap t{g, 1, 1};
    int M = search_degree(t);
    if (2 * M > 8) continue;
    EXPECT_EQ(fixed_point_count(t), NaiveFixedPoints(g, 1, 1, 2 * M)) << g.str();
  }
}

TEST(EllptTest, ResourceBoundThrown) {
  EXPECT_THROW(fixed_point_count({QElem{}, 2, 2}, 2), ResourceBound);
  EXPECT_THROW(fixed_point_count({QElem{}, 0, 1}), std::invalid_argument);
}

TEST(EllptTest, UntwistedFrobeniusTraces) {
  EXPECT_EQ(lefschetz_trace({QElem{}, 1, 1}), 0);
  EXPECT_EQ(lefschetz_trace({QElem{}, 2, 1}), -4);
  EXPECT_EQ(twisted_trace({QElem{}, 2, 1}), CycNum(-1));
}

TEST(EllptTest, TwistedTracesMatchTauQ) {
  for (const Toggles& tg : toggle_sweep("both"))
    for (int f : {1, 2}) {
      GradedGroup gg(f, tg);
      GChar tq = build_tau_q(gg);
      for (const QElem& g : q_elements()) {
        TwistedMap t{g, 1, f};
        if (search_degree(t) > 16) continue;
        EXPECT_EQ(twisted_trace(t), tq.at(GradedQElem{g, 1})) << tg.label() << " f=" << f << " " << g.str();
      }
    }
}

TEST(EllptTest, Verifiers) {
  EXPECT_TRUE(verify_action_preserves_curve().ok());
  for (int f = 1; f <= 6; ++f) EXPECT_TRUE(verify_point_counts(f).ok()) << f;
  Toggles t{};
  Report r = verify_h1_character(1, t);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.count(Verdict::kSkip), 0);
  EXPECT_TRUE(verify_curve_properties(1, t).ok());
  EXPECT_EQ(verify_h1_character(3, t).count(Verdict::kSkip), 1);
}

// Property: Hasse bound for both curves over every small field.
TEST(EllptTest, HasseBound) {
  for (Curve c : {Curve::kE, Curve::kEprime})
    for (int m = 1; m <= 16; ++m) {
      long q = 1L << m, a = q + 1 - count_points(c, m);
      EXPECT_LE(a * a, 4 * q) << m;
    }
}

}  // namespace
}  // namespace cond3
