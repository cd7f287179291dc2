#ifndef COND3_QGROUP_H_
#define COND3_QGROUP_H_

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "cond3/report.h"

namespace cond3 {

// F_4 = {0, 1, z, z^2} encoded as 0, 1, 2, 3 (z = x in F_2[x]/(x^2+x+1)).
using F4 = std::uint8_t;
F4 f4_mul(F4 a, F4 b);
F4 f4_inv(F4 a);
F4 f4_sqr(F4 a);
inline F4 f4_add(F4 a, F4 b) { return a ^ b; }

// Configuration toggles: each 0 (first choice) or 1 (second choice).
struct Toggles {
  int gamma0 = 0;          // gamma0 in {z, z^2} pinning the C4 generator g(1,1,gamma0)
  int zeta3 = 0;           // residue cube root of unity in {z, z^2}
  int sqrt_minus_two = 0;  // sign of the chosen square root of -2
  std::string label() const;
};
inline F4 gamma0_of(const Toggles& t) { return t.gamma0 ? 3 : 2; }
inline F4 zeta3_of(const Toggles& t) { return t.zeta3 ? 3 : 2; }
std::vector<Toggles> toggle_sweep(const std::string& mode);

// g(alpha, beta, gamma) with alpha gamma^2 + alpha^2 gamma = beta^3.
struct QElem {
  F4 a = 1, b = 0, c = 0;
  bool operator==(const QElem& o) const { return a == o.a && b == o.b && c == o.c; }
  bool operator<(const QElem& o) const;
  bool valid() const;
  std::string str() const;
};

QElem q_mul(const QElem& x, const QElem& y);
QElem q_inv(const QElem& x);
// Entries raised to the 2^e-th power.
QElem q_frob(const QElem& x, long e);
// All 24 elements, sorted by (alpha, beta, gamma).
const std::vector<QElem>& q_elements();
int q_index(const QElem& x);

struct GradedQElem {
  QElem g;
  long n = 0;
  bool operator==(const GradedQElem& o) const { return g == o.g && n == o.n; }
  std::string str() const;
};

// (g, n)(g', n') = (g * r^n(g'), n + n') where r acts by x -> x^q on entries.
GradedQElem graded_mul(const GradedQElem& x, const GradedQElem& y, int f);
GradedQElem graded_inv(const GradedQElem& x, int f);
GradedQElem graded_pow(const GradedQElem& x, long e, int f);

enum class SubgroupName { kQ, kQ8, kC4, kZ, kC3, kC6, kC, kCprime, kCdoubleprime, kFull };
const char* SubgroupLabel(SubgroupName s, bool graded);

// Subgroup of the finite quotient, as a sorted list of element ids.
struct Subgroup {
  std::string name;
  std::vector<int> elems;
  std::vector<char> mask;
  bool contains(int id) const { return mask[id] != 0; }
  int size() const { return static_cast<int>(elems.size()); }
};

struct DoubleCoset {
  int rep;
  int size;
  std::vector<int> intersection;  // H meet rep K rep^-1
};

// Finite quotient of Q x| Z by the central subgroup generated by (1, N):
// N = 8 for f odd, N = 1 for f even. f = 0 models the ungraded group Q.
// Element ids run over (n0, alpha, beta, gamma) lexicographically, n0 in [0, N).
class GradedGroup {
 public:
  GradedGroup(int f, const Toggles& t);

  int f() const { return f_; }
  int period() const { return period_; }
  int size() const { return period_ * 24; }
  const Toggles& toggles() const { return toggles_; }
  bool graded() const { return f_ > 0; }

  int id_of(const QElem& g, long n0) const;
  // Id of (g, n) and the power of the central element (1, N) split off.
  int id_of(const GradedQElem& x, long* carry) const;
  GradedQElem elem(int id) const;
  int identity() const { return id_of(QElem{}, 0); }

  // Product and inverse on representatives; carry counts split-off (1, N).
  int mul(int x, int y, int* carry) const;
  int inv(int x, int* carry) const;
  int mul(int x, int y) const { return mul_[x * size() + y]; }
  int inv(int x) const { return inv_[x]; }
  int conj(int y, int x) const;  // y x y^-1

  Subgroup subgroup(SubgroupName s, bool graded = true) const;
  Subgroup from_list(const std::string& name, std::vector<int> ids) const;
  bool is_subgroup(const Subgroup& h) const;
  std::vector<DoubleCoset> double_cosets(const Subgroup& h, const Subgroup& k) const;
  // Whether y lies in the double coset H x K.
  bool same_double_coset(const Subgroup& h, const Subgroup& k, int x, int y) const;
  std::vector<std::vector<int>> conjugacy_classes() const;

  // The element x = g(1, z3, z3) with z3 the chosen residue cube root.
  QElem x_gen() const;

 private:
  int f_, period_;
  Toggles toggles_;
  std::vector<int> mul_, mul_carry_, inv_, inv_carry_;
};

struct CyclicExponent {
  long e;   // generator^e = target * central^k
  long k;
};
// Smallest e >= 0 with generator^e equal to target modulo the central element
// (1, period); fails when the target is outside the cyclic span.
bool express_in_cyclic(const GradedQElem& generator, const GradedQElem& target, long period,
                       int f, CyclicExponent* out);

// Orders, group axioms, normality, the grading twist, the known graded
// products and double-coset decompositions of the finite quotient.
Report verify_qgroup(int f, const Toggles& t);

}  // namespace cond3

#endif  // COND3_QGROUP_H_
