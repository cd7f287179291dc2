#include "cond3/gf2k.h"

#include <gtest/gtest.h>

#include <random>
#include <set>

namespace cond3 {
namespace {

int Degree(u64 p) { return p ? 63 - __builtin_clzll(p) : -1; }

u64 NaiveRemainder(u64 a, u64 p) {
  for (int d = Degree(a); d >= Degree(p); d = Degree(a)) a ^= p << (d - Degree(p));
  return a;
}

// Trial division by every polynomial of degree 1..m/2.
bool NaiveIrreducible(u64 p) {
  int m = Degree(p);
  for (u64 d = 2; Degree(d) <= m / 2; ++d)
    if (NaiveRemainder(p, d) == 0) return false;
  return true;
}

// Shift-and-add multiplication modulo the full modulus polynomial.
u64 NaiveMul(u64 a, u64 b, u64 modulus, int m) {
  u64 r = 0;
  for (int i = m - 1; i >= 0; --i) {
    r <<= 1;
    if ((r >> m) & 1) r ^= modulus;
    if ((b >> i) & 1) r ^= a;
  }
  return r;
}

TEST(GF2kTest, SmallFields) {
  const GF2Field& f1 = gf_make(1);
  EXPECT_EQ(f1.generator(), 1u);
  EXPECT_EQ(f1.mul(1, 1), 1u);
  const GF2Field& f2 = gf_make(2);
  EXPECT_EQ(f2.tail(), 3u);  // x^2 + x + 1
  EXPECT_EQ(f2.order(2), 3u);
  EXPECT_EQ(f2.order(3), 3u);
  EXPECT_EQ(gf_make(4).tail(), 3u);  // x^4 + x + 1
  EXPECT_THROW(gf_make(0), std::invalid_argument);
  EXPECT_THROW(gf_make(65), std::invalid_argument);
}

TEST(GF2kTest, ModulusIsSmallestIrreducible) {
  for (int m = 2; m <= 16; ++m) {
    u64 p = (u64{1} << m) | gf_make(m).tail();
    EXPECT_TRUE(NaiveIrreducible(p)) << m;
    for (u64 smaller = (u64{1} << m) | 1; smaller < p; smaller += 2)
      EXPECT_FALSE(NaiveIrreducible(smaller)) << m << " " << smaller;
  }
}

TEST(GF2kTest, GeneratorIsSmallestPrimitive) {
  for (int m = 2; m <= 12; ++m) {
    const GF2Field& F = gf_make(m);
    for (u64 g = 2; g < F.generator(); ++g) EXPECT_LT(F.order(g), F.mask()) << m;
    std::set<u64> seen;
    u64 v = 1;
    for (u64 i = 0; i < F.mask(); ++i, v = F.mul(v, F.generator())) seen.insert(v);
    EXPECT_EQ(seen.size(), F.mask()) << m;
  }
}

TEST(GF2kTest, MultiplicationMatchesNaive) {
  std::mt19937_64 rng(5);
  for (int m : {3, 8, 13, 17, 24, 31, 40, 56, 63}) {
    const GF2Field& F = gf_make(m);
    u64 modulus = (u64{1} << m) | F.tail();
    for (int t = 0; t < 200; ++t) {
      u64 a = rng() & F.mask(), b = rng() & F.mask();
      EXPECT_EQ(F.mul(a, b), NaiveMul(a, b, modulus, m)) << m;
      EXPECT_EQ(F.sqr(a), F.mul(a, a));
      if (a) EXPECT_EQ(F.mul(a, F.inv(a)), 1u);
    }
  }
  const GF2Field& F64 = gf_make(64);
  for (int t = 0; t < 50; ++t) {
    u64 a = rng() | 1;
    EXPECT_EQ(F64.mul(a, F64.inv(a)), 1u);
    EXPECT_EQ(F64.frob(a, 64), a);
  }
}

TEST(GF2kTest, TraceAndNorm) {
  for (int m = 1; m <= 12; ++m) {
    const GF2Field& F = gf_make(m);
    EXPECT_EQ(F.abs_trace(1), m % 2);
    int kernel = 0;
    for (u64 x = 0; x <= F.mask(); ++x) kernel += F.abs_trace(x) == 0;
    EXPECT_EQ(kernel, 1 << (m - 1));
  }
  const GF2Field& F4 = gf_make(2);
  EXPECT_EQ(F4.norm(2, 1), 1u);
  EXPECT_EQ(F4.trace(2, 1), 1u);
}

TEST(GF2kTest, TraceTransitivityExhaustive) {
  for (int f = 1; f <= 6; ++f) {
    const GF2Field& K2 = gf_make(2 * f);
    for (u64 x = 0; x <= K2.mask(); ++x) {
      u64 t = K2.trace(x, f);
      ASSERT_TRUE(K2.in_subfield(t, f));
      ASSERT_EQ(K2.abs_trace(x), K2.sub_abs_trace(t, f)) << f << " " << x;
    }
  }
}

TEST(GF2kTest, FrobeniusIsAutomorphism) {
  std::mt19937_64 rng(9);
  for (int m : {5, 12, 20, 48}) {
    const GF2Field& F = gf_make(m);
    for (int t = 0; t < 100; ++t) {
      u64 a = rng() & F.mask(), b = rng() & F.mask();
      EXPECT_EQ(F.frob(F.mul(a, b), 1), F.mul(F.frob(a, 1), F.frob(b, 1)));
      EXPECT_EQ(F.frob(a ^ b, 3), F.frob(a, 3) ^ F.frob(b, 3));
      EXPECT_EQ(F.frob(a, m), a);
    }
  }
}

TEST(GF2kTest, AdditiveCharacter) {
  const GF2Field& F2 = gf_make(1);
  EXPECT_EQ(add_char({&F2, 0}), CycNum(1));
  EXPECT_EQ(add_char({&F2, 1}), CycNum(-1));
  const GF2Field& F4 = gf_make(2);
  EXPECT_EQ(add_char({&F4, 2}), CycNum(-1));
  const GF2Field& F = gf_make(7);
  for (u64 x = 0; x < 128; ++x)
    for (u64 y = 0; y < 128; y += 5)
      EXPECT_EQ(add_char({&F, x ^ y}), add_char({&F, x}) * add_char({&F, y}));
}

TEST(GF2kTest, EmbeddingIsRingHomomorphism) {
  std::mt19937_64 rng(13);
  for (auto [m, M] : std::vector<std::pair<int, int>>{{2, 4}, {2, 16}, {3, 24}, {4, 8}, {8, 56}, {2, 6}}) {
    const GF2Field& F = gf_make(m);
    const GF2Field& G = gf_make(M);
    const Embedding& e = embedding(m, M);
    EXPECT_EQ(e(0), 0u);
    EXPECT_EQ(e(1), 1u);
    for (int t = 0; t < 100; ++t) {
      u64 a = rng() & F.mask(), b = rng() & F.mask();
      EXPECT_EQ(e(F.mul(a, b)), G.mul(e(a), e(b)));
      EXPECT_EQ(e(a ^ b), e(a) ^ e(b));
      EXPECT_TRUE(G.in_subfield(e(a), m));
    }
  }
}

TEST(GF2kTest, EmbeddingOfCubeRoot) {
  const GF2Field& F16 = gf_make(4);
  u64 z = embedding(2, 4)(2);
  EXPECT_EQ(F16.order(z), 3u);
  EXPECT_EQ(F16.frob(z, 2), z);
}

TEST(GF2kTest, EmbeddingChainsAreCoherent) {
  for (auto [a, b, c] : std::vector<std::array<int, 3>>{{1, 2, 4}, {2, 4, 8}, {2, 6, 12}, {3, 6, 24}, {4, 8, 16}}) {
    const Embedding& ab = embedding(a, b);
    const Embedding& bc = embedding(b, c);
    const Embedding& ac = embedding(a, c);
    int mismatches = 0;
    for (u64 x = 0; x <= gf_make(a).mask(); ++x) mismatches += bc(ab(x)) != ac(x);
    // Coherence is exact when every step uses the plain generator power.
    if (ab.power_multiplier() == 1 && bc.power_multiplier() == 1 && ac.power_multiplier() == 1)
      EXPECT_EQ(mismatches, 0) << a << "," << b << "," << c;
  }
}

TEST(GF2kTest, ArtinSchreier) {
  const GF2Field& F16 = gf_make(4);
  u64 root;
  ASSERT_TRUE(solve_artin_schreier(F16, 0, &root));
  EXPECT_TRUE(root == 0 || root == 1);
  u64 z = embedding(2, 4)(2);
  ASSERT_TRUE(solve_artin_schreier(F16, z, &root));
  EXPECT_EQ(F16.sqr(root) ^ root, z);
  for (u64 r = 0; r < 16; ++r) {
    bool ok = solve_artin_schreier(F16, r, &root);
    EXPECT_EQ(ok, F16.abs_trace(r) == 0);
  }
  const GF2Field& F56 = gf_make(56);
  std::mt19937_64 rng(1);
  for (int t = 0; t < 20; ++t) {
    u64 x = rng() & F56.mask();
    ASSERT_TRUE(solve_artin_schreier(F56, F56.sqr(x) ^ x, &root));
    EXPECT_TRUE(root == x || root == (x ^ 1));
  }
}

TEST(GF2kTest, LinearMapMatchesDirectEvaluation) {
  const GF2Field& F = gf_make(20);
  std::vector<u64> img(20);
  u64 A = 12345;
  for (int i = 0; i < 20; ++i) img[i] = F.frob(u64{1} << i, 3) ^ F.mul(A, u64{1} << i);
  LinearMap L(img);
  std::mt19937_64 rng(2);
  for (int t = 0; t < 500; ++t) {
    u64 x = rng() & F.mask();
    EXPECT_EQ(L(x), F.frob(x, 3) ^ F.mul(A, x));
  }
}

TEST(GF2kTest, SubfieldElementsAndRootsOfUnity) {
  const GF2Field& F = gf_make(12);
  auto k = F.subfield_elements(4);
  EXPECT_EQ(k.size(), 16u);
  for (u64 x : k) EXPECT_TRUE(F.in_subfield(x, 4));
  EXPECT_EQ(F.order(F.root_of_unity(65)), 65u);
  EXPECT_THROW(F.subfield_elements(5), std::invalid_argument);
}

TEST(GF2kTest, TraceKernelImages) {
  for (int f = 1; f <= 8; ++f) {
    Report r = verify_trace_kernel_images(f);
    EXPECT_TRUE(r.ok()) << f << ": " << (r.first_failure() ? r.first_failure()->computed : "");
    EXPECT_EQ(r.count(Verdict::kPass), 4);
  }
  EXPECT_EQ(verify_trace_kernel_images(13).count(Verdict::kSkip), 1);
}

TEST(GF2kTest, PrimeFactors) {
  EXPECT_EQ(prime_factors(255), (std::vector<u64>{3, 5, 17}));
  EXPECT_EQ(prime_factors(~u64{0}), (std::vector<u64>{3, 5, 17, 257, 641, 65537, 6700417}));
}

}  // namespace
}  // namespace cond3
