#include "cond3/cycnum.h"

#include <gtest/gtest.h>

#include <random>
#include <vector>

namespace cond3 {
namespace {

// Independent oracle: integer polynomial remainder modulo x^8 - x^4 + 1.
std::vector<long> RemainderByPhi24(std::vector<long> p) {
  for (int d = static_cast<int>(p.size()) - 1; d >= 8; --d) {
    long c = p[d];
    if (!c) continue;
    p[d] = 0;
    p[d - 4] += c;
    p[d - 8] -= c;
  }
  p.resize(8, 0);
  return p;
}

CycNum FromCoeffs(const std::vector<long>& c) {
  CycNum r;
  for (int i = 0; i < 8; ++i) r.set_coeff(i, c[i]);
  return r;
}

CycNum RandomCyc(std::mt19937& rng) {
  std::uniform_int_distribution<int> d(-5, 5);
  CycNum r;
  for (int i = 0; i < 8; ++i) r.set_coeff(i, mpq_class(d(rng), 1 + (d(rng) + 5) % 3));
  return r;
}

TEST(CycNumTest, RootOfUnityOrder) {
  EXPECT_EQ(zeta(24, 1) * zeta(24, 23), CycNum(1));
  EXPECT_EQ(zeta(24, 24), CycNum(1));
  EXPECT_EQ(zeta(24, 12), CycNum(-1));
}

TEST(CycNumTest, ReductionMatchesLongDivision) {
  for (int e = 0; e < 24; ++e) {
    std::vector<long> mono(e + 1, 0);
    mono[e] = 1;
    EXPECT_EQ(zeta(24, e), FromCoeffs(RemainderByPhi24(mono))) << "e=" << e;
  }
  std::vector<long> x8{0, 0, 0, 0, -1, 0, 0, 0};
  x8[0] = -1;
  x8[4] = 1;
  EXPECT_EQ(zeta(24, 8), FromCoeffs(x8));
}

TEST(CycNumTest, ProductMatchesPolynomialOracle) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> d(-4, 4);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<long> a(8), b(8), prod(15, 0);
    for (int i = 0; i < 8; ++i) a[i] = d(rng), b[i] = d(rng);
    for (int i = 0; i < 8; ++i)
      for (int j = 0; j < 8; ++j) prod[i + j] += a[i] * b[j];
    EXPECT_EQ(FromCoeffs(a) * FromCoeffs(b), FromCoeffs(RemainderByPhi24(prod)));
  }
}

TEST(CycNumTest, SquareRoots) {
  CycNum z8 = zeta(8, 1);
  EXPECT_EQ((z8 + z8.pow(3)).pow(2), CycNum(-2));
  EXPECT_EQ(sqrt_minus_two() * sqrt_minus_two(), CycNum(-2));
  EXPECT_EQ(sqrt_two() * sqrt_two(), CycNum(2));
  EXPECT_EQ(sqrt_minus_two(1), -sqrt_minus_two());
  EXPECT_EQ(zeta(3, 1) + zeta(3, 2), CycNum(-1));
  EXPECT_EQ(sqrt_q(3) * sqrt_q(3), CycNum(8));
  EXPECT_EQ(sqrt_two().conj(), sqrt_two());
}

TEST(CycNumTest, EtaPairs) {
  EtaPair e1 = eta_pair(1);
  CycNum i = imag_unit();
  EXPECT_TRUE((e1.eta == CycNum(1) + i && e1.eta_prime == CycNum(1) - i) ||
              (e1.eta == CycNum(1) - i && e1.eta_prime == CycNum(1) + i));
  EXPECT_EQ(e1.eta.pow(4), CycNum(-4));
  EXPECT_EQ(eta_pair(3).eta * eta_pair(3).eta_prime, CycNum(8));
  EXPECT_THROW(eta_pair(2), std::invalid_argument);
}

TEST(CycNumTest, EtaIdentitiesForOddDegrees) {
  for (int f = 1; f <= 13; f += 2) {
    EtaPair e = eta_pair(f);
    CycNum q = pow2(f);
    CycNum s = CycNum(-2).pow((f + 1) / 2);
    EXPECT_EQ(e.eta + e.eta_prime, -s) << f;
    EXPECT_EQ(e.eta * e.eta_prime, q) << f;
    EXPECT_EQ(e.eta.pow(4), -(q * q)) << f;
    EXPECT_EQ(e.eta * e.eta + s * e.eta + q, CycNum(0)) << f;
  }
}

TEST(CycNumTest, FieldAxiomsOnRandomSamples) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    CycNum a = RandomCyc(rng), b = RandomCyc(rng), c = RandomCyc(rng);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    if (!a.is_zero()) {
      EXPECT_EQ(a * a.inverse(), CycNum(1));
      EXPECT_EQ((b / a) * a, b);
    }
  }
}

TEST(CycNumTest, ConjugationIsRingAutomorphism) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    CycNum a = RandomCyc(rng), b = RandomCyc(rng);
    EXPECT_EQ((a * b).conj(), a.conj() * b.conj());
    EXPECT_EQ((a + b).conj(), a.conj() + b.conj());
    EXPECT_EQ(a.conj().conj(), a);
  }
  EXPECT_EQ(CycNum::Rational(3, 7).conj(), CycNum::Rational(3, 7));
  EXPECT_EQ(zeta(24, 1).conj(), zeta(24, 23));
}

TEST(CycNumTest, DivisionByZeroThrows) {
  EXPECT_THROW(CycNum(1) / CycNum(0), std::domain_error);
}

TEST(CycNumTest, CanonicalString) {
  EXPECT_EQ(CycNum::Rational(-1, 2).str(), "-1/2+0*z+0*z^2+0*z^3+0*z^4+0*z^5+0*z^6+0*z^7");
  EXPECT_EQ(CycNum::Rational(2, -4), CycNum::Rational(-1, 2));
  EXPECT_EQ(CycNum::Rational(-1, 2).pretty(), "-1/2");
}

TEST(CycNumTest, Powers) {
  EXPECT_EQ(pow2(-3), CycNum::Rational(1, 8));
  EXPECT_EQ(CycNum(2).pow(-2), CycNum::Rational(1, 4));
  EXPECT_EQ(zeta(4, 1).pow(2), CycNum(-1));
}

}  // namespace
}  // namespace cond3
