#include "cond3/eps.h"

#include <gtest/gtest.h>

#include <complex>

#include "cond3/ellpt.h"

namespace cond3 {
namespace {

// Full enumeration of pairs (x, y) with x^2 + x = y^3 (+ y).
long NaiveAffine(int f, bool linear) {
  const GF2Field& F = gf_make(f);
  long n = 0;
  for (u64 x = 0; x <= F.mask(); ++x)
    for (u64 y = 0; y <= F.mask(); ++y)
      if ((F.sqr(x) ^ x) == (F.mul(F.sqr(y), y) ^ (linear ? y : 0))) ++n;
  return n;
}

TEST(GaussSumTest, AffineCountsMatchEnumeration) {
  for (int f = 1; f <= 7; ++f) {
    EXPECT_EQ(affine_count(f, false), NaiveAffine(f, false)) << f;
    EXPECT_EQ(affine_count(f, true), NaiveAffine(f, true)) << f;
  }
}

TEST(GaussSumTest, KnownValues) {
  EXPECT_EQ(gauss_cubic(2), CycNum(4));
  EXPECT_EQ(gauss_cubic(4), CycNum(-8));
  EXPECT_EQ(gauss_cubic_linear(1), CycNum(2));
  EXPECT_EQ(gauss_cubic_linear(9), CycNum(32));  // -(-2)^5
  EXPECT_EQ(affine_count(2, false), 8);
  EXPECT_THROW(gauss_cubic(3), std::invalid_argument);
  EXPECT_THROW(gauss_cubic_linear(2), std::invalid_argument);
}

// -2 Re((-1 + i)^f) in floating point.
TEST(GaussSumTest, LinearSumMatchesComplexEigenvalues) {
  for (int f = 1; f <= 13; f += 2) {
    double expect = -2 * std::pow(std::complex<double>(-1, 1), f).real();
    CycNum s = gauss_cubic_linear(f);
    ASSERT_TRUE(s.is_rational());
    EXPECT_EQ(s, CycNum(std::lround(expect))) << f;
  }
}

TEST(GaussSumTest, CubicSumMatchesPointCount) {
  for (int f = 2; f <= 12; f += 2) {
    long q = 1L << f;
    EXPECT_EQ(gauss_cubic(f), CycNum(count_points(Curve::kE, f) - 1 - q)) << f;
  }
}

TEST(UnitQuotientTest, ProductMatchesSeriesTruncation) {
  Tower T(3, 1, Toggles{}, 20);
  UnitQuotient G(T);
  const GF2Field& K = T.k2();
  EXPECT_EQ(G.size(), 64);
  for (int a = 0; a < G.size(); a += 5)
    for (int b = 0; b < G.size(); b += 3) {
      Series sa = T.constant(1) + Series::Mono(K, G.x1(a), 1) + Series::Mono(K, G.x2(a), 2);
      Series sb = T.constant(1) + Series::Mono(K, G.x1(b), 1) + Series::Mono(K, G.x2(b), 2);
      EXPECT_EQ(G.of_series((sa * sb).truncated(3)), G.mul(a, b));
    }
  EXPECT_EQ(G.of_series(Series::Mono(K, 1, 1)), -1);
}

TEST(RootExponentTest, Values) {
  EXPECT_EQ(root_exponent(CycNum(1)), 0);
  EXPECT_EQ(root_exponent(CycNum(-1)), 12);
  EXPECT_EQ(root_exponent(imag_unit()), 6);
  EXPECT_EQ(root_exponent(CycNum(2)), -1);
}

TEST(PhiConstraintTest, SpecialValues) {
  Report rep;
  Tower T4(4, 1, Toggles{}, 60);
  EXPECT_EQ(build_phi_constraints(T4, Toggles{}, &rep).phi_delta2_cubed, CycNum(64));
  Tower T1(1, 1, Toggles{}, 60);
  PhiConstraint c = build_phi_constraints(T1, Toggles{}, &rep);
  EXPECT_EQ(c.phi_delta2, CycNum(2) / eta_pair(1).eta);
  EXPECT_EQ(c.phi_delta2_sq_plus_delta2_plus_1, CycNum(-2));
  EXPECT_TRUE(rep.ok());
}

TEST(PhiConstraintTest, ResidueRuleOnSecondLayer) {
  Tower T(2, 1, Toggles{}, 60);
  UnitQuotient G(T);
  Report rep;
  PhiConstraint c = build_phi_constraints(T, Toggles{}, &rep);
  for (u64 x : T.k_elements()) {
    int expect = psi(T, Layer::kE, Series::Mono(T.k2(), x, -1)) == 1 ? 0 : 12;
    EXPECT_EQ(c.values[G.index(0, x)], expect);
  }
}

TEST(ExtensionTest, EvenCaseHasTwoQuarterValuedExtensions) {
  Tower T(2, 1, Toggles{}, 60);
  UnitQuotient G(T);
  Report rep;
  PhiConstraint c = build_phi_constraints(T, Toggles{}, &rep);
  EXPECT_EQ(c.determined, 8);
  auto ext = phi_extensions(G, c.values);
  ASSERT_EQ(ext.size(), 2u);
  EXPECT_NE(ext[0], ext[1]);
  for (const auto& e : ext) {
    for (int a = 0; a < G.size(); ++a) {
      if (c.values[a] >= 0) EXPECT_EQ(e[a], c.values[a]);
      for (int b = 0; b < G.size(); ++b) EXPECT_EQ(e[G.mul(a, b)], (e[a] + e[b]) % 24);
    }
    EXPECT_EQ(twisted_unit_sum(T, G, c, e), CycNum::Rational(-1, 4));
  }
}

TEST(ExtensionTest, OddCaseIsFullyDetermined) {
  Tower T(1, 1, Toggles{}, 60);
  UnitQuotient G(T);
  Report rep;
  PhiConstraint c = build_phi_constraints(T, Toggles{}, &rep);
  auto ext = phi_extensions(G, c.values);
  ASSERT_EQ(ext.size(), 1u);
  EXPECT_EQ(twisted_unit_sum(T, G, c, ext[0]), CycNum::Rational(-1, 2));
}

// A wrong special value must be detected by the level-one sum.
TEST(ExtensionTest, WrongSpecialValueIsDetected) {
  Tower T(2, 1, Toggles{}, 60);
  UnitQuotient G(T);
  Report rep;
  PhiConstraint c = build_phi_constraints(T, Toggles{}, &rep);
  c.phi_delta2_cubed = -c.phi_delta2_cubed;
  for (const auto& e : phi_extensions(G, c.values)) EXPECT_NE(twisted_unit_sum(T, G, c, e), CycNum::Rational(-1, 4));
}

TEST(ExtensionTest, InconsistentTableHasNoExtension) {
  Tower T(2, 1, Toggles{}, 60);
  UnitQuotient G(T);
  std::vector<int> v(G.size(), -1);
  v[G.identity()] = 0;
  v[G.index(1, 0)] = 3;  // (1 + u)^2 = 1 + u^2 must then take z^6
  v[G.index(0, 1)] = 0;
  EXPECT_TRUE(phi_extensions(G, v).empty());
}

TEST(EpsVerifiers, AllPassForSmallF) {
  for (int f = 1; f <= 4; ++f) {
    Report r = verify_epsilon(f, Toggles{});
    EXPECT_TRUE(r.ok()) << f << " " << (r.first_failure() ? r.first_failure()->id : "");
    EXPECT_TRUE(verify_eps_properties(f, Toggles{}).ok()) << f;
    EXPECT_TRUE((f % 2 ? verify_gauss_cubic_linear(f) : verify_gauss_cubic(f)).ok()) << f;
  }
  Toggles t;
  t.zeta3 = 1;
  t.gamma0 = 1;
  EXPECT_TRUE(verify_epsilon(3, t).ok());
}

TEST(EpsVerifiers, AssembledValue) {
  Report r = verify_epsilon(2, Toggles{});
  bool seen = false;
  for (const auto& c : r.checks())
    if (c.id == "eps.assemble.final") {
      seen = true;
      EXPECT_EQ(c.computed, CycNum::Rational(-1, 8).str());
    }
  EXPECT_TRUE(seen);
}

}  // namespace
}  // namespace cond3
