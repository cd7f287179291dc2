#ifndef COND3_LFIELD_H_
#define COND3_LFIELD_H_

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "cond3/cycnum.h"
#include "cond3/gf2k.h"
#include "cond3/qgroup.h"
#include "cond3/report.h"

namespace cond3 {

// Thrown when truncation leaves too few known coefficients for a result.
struct PrecisionExhausted : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Truncated Laurent series sum c_i X^i over a binary field, known modulo
// X^prec. Exact finite sums carry prec = kExact.
class Series {
 public:
  static constexpr int kExact = 1 << 28;

  Series() = default;
  explicit Series(const GF2Field* F, int prec = kExact) : F_(F), prec_(prec) {}
  static Series Mono(const GF2Field& F, u64 c, int e, int prec = kExact);
  static Series Const(const GF2Field& F, u64 c) { return Mono(F, c, 0); }

  const GF2Field& field() const { return *F_; }
  int prec() const { return prec_; }
  bool exact() const { return prec_ >= kExact; }
  // Smallest exponent with a nonzero known coefficient; prec() if none.
  int valuation() const;
  bool is_zero() const { return valuation() >= prec_; }
  u64 coeff(int e) const;
  // Lowest and one-past-highest stored exponents.
  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(c_.size()); }

  void add_term(int e, u64 c);
  Series truncated(int prec) const;
  Series operator+(const Series& o) const;
  Series operator-(const Series& o) const { return *this + o; }
  Series operator*(const Series& o) const;
  Series scaled(u64 c) const;
  Series shifted(int k) const;  // times X^k
  // Inverse known to relative precision prec() - valuation(), capped at cap.
  Series inverse(int cap) const;
  // Coefficientwise a -> a^(2^e).
  Series frob(long e) const;
  // Agreement modulo X^n; throws PrecisionExhausted if either side is unknown there.
  bool agrees(const Series& o, int n) const;
  std::string str() const;

 private:
  void trim();

  const GF2Field* F_ = nullptr;
  int prec_ = kExact;
  int lo_ = 0;
  std::vector<u64> c_;
};

// An automorphism of the Artin-Schreier tower over E: coefficients go to
// their 2^(f*eps)-th power, delta4 -> delta4 + a, theta2 -> theta2 + a^2 delta4 + e.
struct TowerAut {
  int eps = 0;
  u64 a = 0;
  u64 e = 0;
  bool operator==(const TowerAut& o) const { return eps == o.eps && a == o.a && e == o.e; }
};

// x0 + x1 d4 + x2 t2 + x3 d4 t2 with components in E (or E_2).
using TowerElem = std::array<Series, 4>;

// Equal-characteristic model of K in F in E and the tower E(d4, t2) in
// the uniformizer u = 1/delta2 of E. Coefficients live in k_2 = F_{2^{2f}},
// with k the subfield of degree f. Relations:
//   h(delta2) = 1/w, h(x) = x^2 + x (f even) or x^2 + x + 1 (f odd),
//   varpi = zeta'^-4 w^3,
//   d4^2 = d4 + delta2 + c, c = 0 (f even) or zeta3 (f odd),
//   t2^2 = t2 + d4^3.
class Tower {
 public:
  Tower(int f, u64 zeta_prime, const Toggles& t, int precision = 60);

  int f() const { return f_; }
  int precision() const { return prec_; }
  const GF2Field& k2() const { return *K2_; }
  u64 zeta3() const { return zeta3_; }
  u64 c() const { return c_; }
  u64 zeta_prime() const { return zp_; }
  // Elements of k (degree-f subfield), increasing.
  const std::vector<u64>& k_elements() const { return kel_; }
  // F_2-basis of k.
  const std::vector<u64>& k_basis() const { return kbasis_; }

  Series u() const { return Series::Mono(*K2_, 1, 1); }
  Series delta2() const { return Series::Mono(*K2_, 1, -1); }
  Series w() const;
  Series w_inverse() const;
  Series varpi() const;
  Series constant(u64 c) const { return Series::Const(*K2_, c); }

  // Tower ring.
  TowerElem embed(const Series& x) const;
  TowerElem d4() const;
  TowerElem t2() const;
  TowerElem add(const TowerElem& x, const TowerElem& y) const;
  TowerElem mul(const TowerElem& x, const TowerElem& y) const;
  TowerElem scale(const TowerElem& x, u64 c) const;
  TowerElem inverse(const TowerElem& x) const;
  TowerElem apply(const TowerAut& s, const TowerElem& x) const;
  bool equal(const TowerElem& x, const TowerElem& y, int n) const;
  // Valuation in units of 1/24 (v(varpi) = 24): d4, t2 have -2, -3 in u-quarters.
  int valuation24(const TowerElem& x) const;

  // Automorphisms of E(d4, t2)/E (eps = 0 only) or of E_2(d4, t2)/E.
  std::vector<TowerAut> automorphisms(bool unramified) const;
  TowerAut compose(const TowerAut& s, const TowerAut& t) const;
  TowerAut identity_aut() const { return {}; }
  // Norm down to E (or to E_2 for the ramified part only); throws
  // std::logic_error if the product has components off the base.
  Series norm(const TowerElem& x, bool unramified) const;

  // E/F: u -> u/(1+u), i.e. delta2 -> delta2 + 1.
  Series sigma_F(const Series& x) const;
  Series norm_EF(const Series& x) const { return x * sigma_F(x); }
  Series trace_EF(const Series& x) const { return x + sigma_F(x); }
  // Coefficients c_j of x = sum c_j w^j for j <= jmax; x must lie in F.
  std::vector<std::pair<int, u64>> w_expansion(const Series& x, int jmax) const;
  // Tr_{F/K} as the trace of multiplication on the K-basis {1, w, w^2},
  // returned as the coefficients of varpi^i, i <= imax.
  std::vector<std::pair<int, u64>> trace_FK(const Series& x, int imax) const;

 private:
  int f_, prec_;
  const GF2Field* K2_;
  u64 zeta3_, c_, zp_;
  std::vector<u64> kel_, kbasis_;
};

// Norm down to E (or E_2) of 1 + xi * Y for every xi in `xis`.
std::vector<Series> norm_family(const Tower& T, const TowerElem& Y, const std::vector<u64>& xis, bool unramified);

enum class Layer { kK, kF, kE };

// psi_Layer(x) = chi_2(Tr_{k/F_2}(residue of Tr_{Layer/K}(x))) as +1 / -1.
// Requires the trace to land in O_K: v_E(x) >= -6, v_F(x) >= -2, x in O_K.
// Throws std::domain_error otherwise.
int psi(const Tower& T, Layer layer, const Series& x);

// N_2(x) = Tr_{k_2/k}(x)^2 + Tr_{k_2/k}(x).
u64 n2_map(const GF2Field& k2, int f, u64 x);

// Unit quotient U_F / U_F^3 of a (c, a1, a2) = c (1 + a1 w + a2 w^2).
struct UnitClass {
  u64 c = 1, a1 = 0, a2 = 0;
  bool operator<(const UnitClass& o) const;
  bool operator==(const UnitClass& o) const { return c == o.c && a1 == o.a1 && a2 == o.a2; }
};
UnitClass unit_class_F(const Tower& T, const Series& unit);

// Membership oracle for Nr_{E/F}(E^x) U_F^3, with the quotient index.
class NormSubgroupF {
 public:
  explicit NormSubgroupF(const Tower& T);
  std::size_t index() const { return index_; }
  // kappa_{E/F}(x) in {+1, -1} for any x in F^x.
  int kappa(const Series& x) const;

 private:
  const Tower* T_;
  std::vector<UnitClass> members_;  // sorted
  std::size_t index_ = 0;
};

Report verify_tower(int f, const Toggles& t, int precision = 60);
Report verify_norm_expansions(int f, const Toggles& t, int precision = 60);
Report verify_psi(int f, const Toggles& t, int precision = 60);
Report verify_varkappa(int f, const Toggles& t, int precision = 60);
Report verify_ramification(int f, const Toggles& t, int precision = 60);
Report verify_n2_identification(int f, const Toggles& t, int precision = 60);
Report verify_det_norm(int f, const Toggles& t, int precision = 60);
// Multiplicativity, trace linearity, invariance under automorphisms,
// trace integrality and precision stability.
Report verify_lfield_properties(int f, const Toggles& t, int precision = 60);

}  // namespace cond3

#endif  // COND3_LFIELD_H_
