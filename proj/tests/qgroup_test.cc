#include "cond3/qgroup.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

namespace cond3 {
namespace {

using Mat = std::array<std::array<F4, 3>, 3>;

Mat ToMatrix(const QElem& g) {
  Mat m{};
  m[0] = {g.a, g.b, g.c};
  m[1] = {0, f4_sqr(g.a), f4_sqr(g.b)};
  m[2] = {0, 0, g.a};
  return m;
}

Mat MatMul(const Mat& x, const Mat& y) {
  Mat r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      F4 s = 0;
      for (int k = 0; k < 3; ++k) s ^= f4_mul(x[i][k], y[k][j]);
      r[i][j] = s;
    }
  return r;
}

constexpr F4 kZ = 2, kZ2 = 3;

TEST(QGroupTest, OrderAndRelation) {
  EXPECT_EQ(q_elements().size(), 24u);
  for (const QElem& g : q_elements()) EXPECT_TRUE(g.valid());
}

TEST(QGroupTest, ProductMatchesMatrixOracle) {
  for (const QElem& x : q_elements())
    for (const QElem& y : q_elements()) EXPECT_EQ(ToMatrix(q_mul(x, y)), MatMul(ToMatrix(x), ToMatrix(y)));
}

TEST(QGroupTest, InverseMatchesMatrixOracle) {
  Mat id = ToMatrix(QElem{});
  for (const QElem& x : q_elements()) {
    EXPECT_EQ(MatMul(ToMatrix(x), ToMatrix(q_inv(x))), id);
    EXPECT_EQ(MatMul(ToMatrix(q_inv(x)), ToMatrix(x)), id);
  }
  EXPECT_EQ(q_inv(QElem{kZ, 0, 0}), (QElem{kZ2, 0, 0}));
}

TEST(QGroupTest, Examples) {
  QElem e{};
  for (const QElem& a : q_elements()) EXPECT_EQ(q_mul(e, a), a);
  EXPECT_EQ(q_mul(QElem{1, 1, kZ}, QElem{1, 1, kZ}), (QElem{1, 0, 1}));
}

TEST(QGroupTest, Associativity) {
  for (const QElem& x : q_elements())
    for (const QElem& y : q_elements())
      for (const QElem& z : q_elements()) EXPECT_EQ(q_mul(q_mul(x, y), z), q_mul(x, q_mul(y, z)));
}

TEST(QGroupTest, SubgroupOrdersAndStructure) {
  GradedGroup Q(0, Toggles{});
  EXPECT_EQ(Q.subgroup(SubgroupName::kQ, false).size(), 24);
  EXPECT_EQ(Q.subgroup(SubgroupName::kQ8, false).size(), 8);
  EXPECT_EQ(Q.subgroup(SubgroupName::kC4, false).size(), 4);
  EXPECT_EQ(Q.subgroup(SubgroupName::kZ, false).size(), 2);
  EXPECT_EQ(Q.subgroup(SubgroupName::kC3, false).size(), 3);
  EXPECT_EQ(Q.subgroup(SubgroupName::kC6, false).size(), 6);
  Subgroup z = Q.subgroup(SubgroupName::kZ, false);
  EXPECT_EQ(z.elems, (std::vector<int>{Q.id_of(QElem{1, 0, 0}, 0), Q.id_of(QElem{1, 0, 1}, 0)}));
  // Z is the center, Q8 is normal.
  Subgroup q8 = Q.subgroup(SubgroupName::kQ8, false);
  for (int y = 0; y < 24; ++y) {
    for (int x : z.elems) EXPECT_EQ(Q.conj(y, x), x);
    for (int x : q8.elems) EXPECT_TRUE(q8.contains(Q.conj(y, x)));
  }
  int central = 0;
  for (int x = 0; x < 24; ++x) {
    bool c = true;
    for (int y = 0; y < 24; ++y) c = c && Q.conj(y, x) == x;
    central += c;
  }
  EXPECT_EQ(central, 2);
}

TEST(QGroupTest, GradedProducts) {
  QElem x{1, kZ, kZ};
  EXPECT_EQ(graded_pow({x, 1}, 4, 1), (GradedQElem{QElem{1, 0, 1}, 4}));
  GradedQElem y{x, 0};
  GradedQElem lhs = graded_mul(graded_mul(graded_inv(y, 1), {x, 1}, 1), y, 1);
  GradedQElem rhs = graded_mul(graded_pow({x, 1}, 3, 1), {QElem{}, -2}, 1);
  EXPECT_EQ(lhs, rhs);
  for (const QElem& a : q_elements())
    for (const QElem& b : q_elements()) {
      EXPECT_EQ(graded_mul({a, 1}, {b, 0}, 2), (GradedQElem{q_mul(a, b), 1}));
      // The twist is an automorphism.
      EXPECT_EQ(q_frob(q_mul(a, b), 1), q_mul(q_frob(a, 1), q_frob(b, 1)));
    }
  EXPECT_EQ(graded_mul({x, 1}, graded_inv({x, 1}, 3), 3), (GradedQElem{QElem{}, 0}));
}

TEST(QGroupTest, FiniteQuotientTablesAgreeWithInfiniteGroup) {
  for (int f : {1, 2, 3}) {
    GradedGroup G(f, Toggles{});
    for (int a = 0; a < G.size(); a += 7)
      for (int b = 0; b < G.size(); b += 5) {
        int c;
        int p = G.mul(a, b, &c);
        GradedQElem direct = graded_mul(G.elem(a), G.elem(b), f);
        long c2;
        EXPECT_EQ(G.id_of(direct, &c2), p);
        EXPECT_EQ(c2, c);
      }
  }
}

TEST(QGroupTest, GradedSubgroups) {
  for (int zt : {0, 1}) {
    GradedGroup G(1, Toggles{0, zt, 0});
    Subgroup c = G.subgroup(SubgroupName::kC);
    Subgroup q8 = G.subgroup(SubgroupName::kQ8);
    EXPECT_EQ(q8.size(), 2 * c.size());
    Subgroup cp = G.subgroup(SubgroupName::kCprime);
    Subgroup cpp = G.subgroup(SubgroupName::kCdoubleprime);
    EXPECT_EQ(cp.size(), 8);
    for (int x : cp.elems) EXPECT_TRUE(c.contains(x));
    for (int x : cpp.elems) EXPECT_TRUE(cp.contains(x));
  }
  GradedGroup G2(2, Toggles{});
  EXPECT_THROW(G2.subgroup(SubgroupName::kC), std::invalid_argument);
}

TEST(QGroupTest, DoubleCosetsFromTheLiterature) {
  for (int f : {1, 3}) {
    for (int zt : {0, 1}) {
      GradedGroup G(f, Toggles{0, zt, 0});
      F4 z = zeta3_of(G.toggles());
      Subgroup c6 = G.subgroup(SubgroupName::kC6);
      Subgroup c = G.subgroup(SubgroupName::kC);
      Subgroup cp = G.subgroup(SubgroupName::kCprime);
      Subgroup cpp = G.subgroup(SubgroupName::kCdoubleprime);
      auto d1 = G.double_cosets(c6, c6);
      ASSERT_EQ(d1.size(), 2u);
      // The two listed representatives are inequivalent.
      int r2 = G.id_of(QElem{1, 1, z}, 0);
      EXPECT_FALSE(G.same_double_coset(c6, c6, G.identity(), r2));
      Subgroup zz = G.subgroup(SubgroupName::kZ);
      std::vector<int> inter;
      for (int b : c6.elems)
        if (c6.contains(G.conj(r2, b))) inter.push_back(G.conj(r2, b));
      std::sort(inter.begin(), inter.end());
      EXPECT_EQ(inter, zz.elems);
      int y = G.id_of(QElem{1, z, z}, 0), w = G.id_of(QElem{z, 0, 0}, 0);
      EXPECT_FALSE(G.same_double_coset(cp, c, G.identity(), y));
      EXPECT_FALSE(G.same_double_coset(cp, c, G.identity(), w));
      EXPECT_FALSE(G.same_double_coset(cp, c, y, w));
      std::vector<int> inter2;
      for (int b : c.elems)
        if (cp.contains(G.conj(w, b))) inter2.push_back(G.conj(w, b));
      std::sort(inter2.begin(), inter2.end());
      EXPECT_EQ(inter2, cpp.elems);
      auto d2 = G.double_cosets(cp, c);
      EXPECT_EQ(d2.size(), 3u);
      auto d3 = G.double_cosets(cp, c6);
      ASSERT_EQ(d3.size(), 1u);
      EXPECT_EQ(d3[0].intersection, cpp.elems);
      auto d4 = G.double_cosets(c, c6);
      EXPECT_EQ(d4.size(), 1u);
      for (const auto& ds : {d1, d2, d3, d4}) {
        int total = 0;
        for (const auto& d : ds) total += d.size;
        EXPECT_EQ(total, G.size());
      }
    }
  }
}

TEST(QGroupTest, ExpressInCyclic) {
  QElem x{1, kZ, kZ};
  CyclicExponent ce;
  ASSERT_TRUE(express_in_cyclic({x, 1}, {x, 1}, 2, 1, &ce));
  EXPECT_EQ(ce.e, 1);
  ASSERT_TRUE(express_in_cyclic({x, 1}, {QElem{}, 0}, 2, 1, &ce));
  EXPECT_EQ(ce.e, 0);
  ASSERT_TRUE(express_in_cyclic({x, 1}, {QElem{1, kZ2, kZ}, -1}, 2, 1, &ce));
  EXPECT_LT(ce.e, 8);
  GradedQElem lhs = graded_pow({x, 1}, ce.e, 1);
  EXPECT_EQ(lhs.g, (QElem{1, kZ2, kZ}));
  EXPECT_EQ(lhs.n, -1 + 2 * ce.k);
  EXPECT_FALSE(express_in_cyclic({x, 1}, {QElem{kZ, 0, 0}, 0}, 2, 1, &ce));
}

TEST(QGroupVerifier, PassesForAllTogglesAndParities) {
  for (int f = 1; f <= 4; ++f)
    for (const Toggles& t : toggle_sweep("both")) {
      Report r = verify_qgroup(f, t);
      EXPECT_TRUE(r.ok()) << f << " " << t.label() << " " << (r.first_failure() ? r.first_failure()->id : "");
      EXPECT_EQ(r.count(Verdict::kSkip), 0);
    }
  EXPECT_EQ(verify_qgroup(0, Toggles{}).count(Verdict::kSkip), 1);
}

}  // namespace
}  // namespace cond3
