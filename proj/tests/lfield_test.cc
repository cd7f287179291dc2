#include "cond3/lfield.h"

#include <gtest/gtest.h>

#include <random>

namespace cond3 {
namespace {

Series RandomSeries(const GF2Field& F, std::mt19937_64& rng, int lo, int len, int prec) {
  Series s(&F, prec);
  for (int e = lo; e < lo + len; ++e) s.add_term(e, rng() & F.mask());
  return s;
}

// Schoolbook product of coefficient lists, as an oracle for Series::operator*.
TEST(SeriesTest, ProductMatchesSchoolbook) {
  const GF2Field& F = gf_make(6);
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 20; ++trial) {
    Series a = RandomSeries(F, rng, -3, 7, Series::kExact);
    Series b = RandomSeries(F, rng, -2, 5, Series::kExact);
    Series p = a * b;
    for (int e = -5; e < 12; ++e) {
      u64 s = 0;
      for (int i = -3; i < 4; ++i) s ^= F.mul(a.coeff(i), b.coeff(e - i));
      EXPECT_EQ(p.coeff(e), s) << e;
    }
  }
}

TEST(SeriesTest, InverseAndPrecision) {
  const GF2Field& F = gf_make(4);
  Series x = Series::Mono(F, 1, -1) + Series::Const(F, 1);  // u^-1 + 1
  Series y = x.inverse(20);
  EXPECT_EQ(y.prec(), 20);
  EXPECT_TRUE((x * y).agrees(Series::Const(F, 1), 19));
  // 1/(1+u) = sum u^i in characteristic 2.
  Series z = (Series::Const(F, 1) + Series::Mono(F, 1, 1)).inverse(10);
  for (int e = 0; e < 10; ++e) EXPECT_EQ(z.coeff(e), 1u);
  Series t(&F, 5);
  t.add_term(2, 3);
  EXPECT_EQ(t.inverse(100).prec(), 1);  // 5 - 2*2
  EXPECT_THROW(t.agrees(t, 6), PrecisionExhausted);
  EXPECT_THROW(Series(&F, 4).inverse(10), PrecisionExhausted);
}

// Determinant of multiplication by y on {1, d4, t2, d4 t2}: an oracle for the
// automorphism-product norm.
Series DetNorm(const Tower& T, const TowerElem& y) {
  std::array<TowerElem, 4> basis = {T.embed(T.constant(1)), T.d4(), T.t2(), T.mul(T.d4(), T.t2())};
  Series m[4][4];
  for (int j = 0; j < 4; ++j) {
    TowerElem col = T.mul(y, basis[j]);
    for (int i = 0; i < 4; ++i) m[i][j] = col[i];
  }
  Series det(&T.k2());
  int perm[4] = {0, 1, 2, 3};
  do {
    Series term = T.constant(1);
    for (int i = 0; i < 4; ++i) term = term * m[i][perm[i]];
    det = det + term;  // signs vanish in characteristic 2
  } while (std::next_permutation(perm, perm + 4));
  return det;
}

TEST(TowerTest, NormMatchesDeterminant) {
  for (int f : {1, 2, 3}) {
    Tower T(f, 1, Toggles{}, 40);
    std::mt19937_64 rng(f);
    for (int trial = 0; trial < 3; ++trial) {
      TowerElem y = T.embed(T.constant(1) + RandomSeries(T.k2(), rng, 1, 4, 40));
      y[1] = RandomSeries(T.k2(), rng, 0, 4, 40);
      y[2] = RandomSeries(T.k2(), rng, 1, 4, 40);
      y[3] = RandomSeries(T.k2(), rng, 1, 4, 40);
      EXPECT_TRUE(T.norm(y, false).agrees(DetNorm(T, y), 10)) << f;
    }
  }
}

TEST(TowerTest, RelationsHold) {
  for (int f : {1, 2}) {
    Tower T(f, 1, Toggles{}, 40);
    TowerElem d = T.d4(), t = T.t2();
    TowerElem lhs = T.add(T.mul(d, d), d);
    TowerElem rhs = T.embed(T.delta2() + T.constant(T.c()));
    EXPECT_TRUE(T.equal(lhs, rhs, 20));
    EXPECT_TRUE(T.equal(T.add(T.mul(t, t), t), T.mul(d, T.mul(d, d)), 20));
    EXPECT_TRUE(T.equal(T.mul(t, T.inverse(t)), T.embed(T.constant(1)), 20));
    EXPECT_EQ(T.valuation24(t), -3);
    EXPECT_EQ(T.valuation24(d), -2);
  }
}

TEST(TowerTest, NormOfDelta2) {
  Tower even(2, 1, Toggles{}, 40), odd(1, 1, Toggles{}, 40);
  // delta2 (delta2 + 1) = 1/w in both parities up to the +1 of h_1.
  EXPECT_TRUE(even.norm_EF(even.delta2()).agrees(even.w().inverse(40), 10));
  EXPECT_TRUE(odd.norm_EF(odd.delta2()).agrees(odd.w().inverse(40) + odd.constant(1), 10));
}

TEST(TowerTest, NormExpansionExampleAtXiOne) {
  Tower T(2, 1, Toggles{}, 60);
  TowerElem y = T.add(T.embed(T.constant(1)), T.mul(T.d4(), T.inverse(T.t2())));
  Series n = T.norm(y, false);
  // 1 + 0 delta2^-1 + 1 delta2^-2.
  EXPECT_EQ(n.coeff(0), 1u);
  EXPECT_EQ(n.coeff(1), 0u);
  EXPECT_EQ(n.coeff(2), 1u);
}

TEST(TowerTest, AutomorphismGroups) {
  Tower even(2, 1, Toggles{}, 40), odd(3, 1, Toggles{}, 40);
  EXPECT_EQ(even.automorphisms(false).size(), 4u);
  EXPECT_EQ(odd.automorphisms(false).size(), 4u);
  EXPECT_EQ(odd.automorphisms(true).size(), 8u);
  // Composition agrees with applying in sequence on a generic element.
  TowerElem x = odd.add(odd.t2(), odd.scale(odd.d4(), odd.zeta3()));
  for (const auto& s : odd.automorphisms(true))
    for (const auto& r : odd.automorphisms(true))
      EXPECT_TRUE(odd.equal(odd.apply(odd.compose(s, r), x), odd.apply(s, odd.apply(r, x)), 10));
}

// Tr_{E/F}(delta2^j) = delta2^j + (delta2 + 1)^j by hand.
TEST(PsiTest, TraceByBinomialExpansion) {
  Tower T(2, 1, Toggles{}, 40);
  for (int j = 0; j <= 6; ++j) {
    Series hand(&T.k2());
    for (int i = 0; i < j; ++i)
      if (((j & i) == i)) hand = hand + Series::Mono(T.k2(), 1, -i);  // binomial(j, i) odd
    EXPECT_TRUE(T.trace_EF(Series::Mono(T.k2(), 1, -j)).agrees(hand, 10)) << j;
  }
}

TEST(PsiTest, KnownValues) {
  for (int f : {1, 2, 3}) {
    Tower T(f, 1, Toggles{}, 40);
    EXPECT_EQ(psi(T, Layer::kE, Series::Mono(T.k2(), 1, -3)), 1);
    EXPECT_EQ(psi(T, Layer::kE, T.delta2()), psi(T, Layer::kE, Series::Mono(T.k2(), 1, -2)));
    // psi_F(1) = chi_2(Tr_k(3)) = (-1)^f; psi_K(1) likewise.
    EXPECT_EQ(psi(T, Layer::kF, T.constant(1)), f % 2 ? -1 : 1);
    EXPECT_EQ(psi(T, Layer::kK, T.constant(1)), f % 2 ? -1 : 1);
    EXPECT_THROW(psi(T, Layer::kE, Series::Mono(T.k2(), 1, -7)), std::domain_error);
  }
}

TEST(N2Test, SmallValues) {
  const GF2Field& K = gf_make(2);
  EXPECT_EQ(n2_map(K, 1, 1), 0u);
  EXPECT_EQ(n2_map(K, 1, 2), 0u);  // Tr(zeta) = 1
  EXPECT_EQ(n2_map(K, 1, 0), 0u);
}

TEST(KappaTest, MembershipOracleAgreesWithSign) {
  for (int f : {1, 2}) {
    Tower T(f, 1, Toggles{}, 60);
    NormSubgroupF N(T);
    EXPECT_EQ(N.index(), 2u);
    EXPECT_EQ(N.kappa(T.w()), f % 2 ? -1 : 1);
    EXPECT_EQ(N.kappa(T.constant(1)), 1);
    // Norms are in the kernel.
    Series y = T.constant(1) + Series::Mono(T.k2(), 1, 1) + T.delta2();
    EXPECT_EQ(N.kappa(T.norm_EF(y).truncated(60)), 1);
  }
}

TEST(LfieldVerifiers, AllPassForSmallF) {
  for (const Toggles& t : toggle_sweep("both"))
    for (int f = 1; f <= 4; ++f) {
      EXPECT_TRUE(verify_tower(f, t).ok()) << f << t.label();
      EXPECT_TRUE(verify_norm_expansions(f, t).ok()) << f << t.label();
      EXPECT_TRUE(verify_psi(f, t).ok()) << f;
      EXPECT_TRUE(verify_varkappa(f, t).ok()) << f;
      EXPECT_TRUE(verify_ramification(f, t).ok()) << f;
      EXPECT_TRUE(verify_n2_identification(f, t).ok()) << f;
      EXPECT_TRUE(verify_det_norm(f, t).ok()) << f;
    }
  EXPECT_EQ(verify_ramification(2, Toggles{}).count(Verdict::kSkip), 1);
}

TEST(LfieldVerifiers, Properties) {
  for (int f = 1; f <= 3; ++f) EXPECT_TRUE(verify_lfield_properties(f, Toggles{}).ok()) << f;
}

}  // namespace
}  // namespace cond3
