#ifndef COND3_DALG_H_
#define COND3_DALG_H_

#include <array>
#include <string>
#include <vector>

#include "cond3/gf2k.h"
#include "cond3/qgroup.h"
#include "cond3/report.h"

namespace cond3 {

// Skew polynomials sum a_i t^i over F_{2^(8f)} with t a = a^q t, q = 2^f.
// t^8 is central and plays the role of delta2.
class SkewPoly {
 public:
  SkewPoly(const GF2Field& F, int f) : F_(&F), f_(f) {}
  static SkewPoly Mono(const GF2Field& F, int f, u64 a, int deg);

  const GF2Field& field() const { return *F_; }
  int f() const { return f_; }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  u64 coeff(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : 0; }
  void add_term(int i, u64 a);

  SkewPoly operator+(const SkewPoly& o) const;
  SkewPoly operator-(const SkewPoly& o) const { return *this + o; }
  SkewPoly operator*(const SkewPoly& o) const;
  bool operator==(const SkewPoly& o) const { return c_ == o.c_; }
  bool operator!=(const SkewPoly& o) const { return !(*this == o); }
  std::string str() const;

 private:
  void trim();

  const GF2Field* F_;
  int f_;
  std::vector<u64> c_;
};

// Data of the explicit isomorphism of cyclic algebras for odd f.
struct WitnessData {
  int n_f = 0, m_f = 0;
  u64 zeta3 = 0, a0 = 0, b0 = 0, b4 = 0;
};
// n_f, m_f in {1, 2} with n_f = (f+1)/2 and m_f = (f^2+7)/8 mod 2.
int witness_n(int f);
int witness_m(int f);
// Builds a0, b0, b4 with the given Artin-Schreier root choices (0 or 1 adds 1).
WitnessData witness_data(int f, const Toggles& t, int a0_choice, int b0_choice);
SkewPoly witness_delta4(const GF2Field& F, int f, const WitnessData& d);
SkewPoly witness_theta2(const GF2Field& F, int f, const WitnessData& d);
// theta2 with t^2 coefficient a0 + zeta3^n_f; equals witness_theta2 when n_f = 1.
SkewPoly witness_theta2_adjusted(const GF2Field& F, int f, const WitnessData& d);

// Element sum_{i<4} phi^i c_i of O_D / phi^4 O_D with c_i in k_2 = F_{2^(2f)},
// phi^2 = varpi and c phi = phi c^q.
struct DResidue {
  std::array<u64, 4> c{};
  bool operator==(const DResidue& o) const { return c == o.c; }
};
DResidue dres_mul(const GF2Field& k2, int f, const DResidue& x, const DResidue& y);
// kappa_1(d) = c_0 and kappa_2(d) = c_1 / c_0^q.
u64 kappa1(const DResidue& d);
u64 kappa2(const GF2Field& k2, int f, const DResidue& d);
// Tr_{k_2/F_2}(zeta^(1-q) zeta'^-2 kappa_2(d)).
int f_of(const GF2Field& k2, int f, u64 zeta, u64 zeta_prime, const DResidue& d);

// 2x2 matrices over O_K / p^3 = k[varpi]/(varpi^3), entries as coefficient triples.
using Trunc3 = std::array<u64, 3>;
struct Mat2 {
  std::array<Trunc3, 4> e{};  // a, b, c, d
  bool operator==(const Mat2& o) const { return e == o.e; }
};
Mat2 mat_mul(const GF2Field& k, const Mat2& x, const Mat2& y);

Report verify_skew_ring(int f);
Report verify_witness(int f, const Toggles& t);
Report verify_kappa_and_descact(int f, const Toggles& t);
Report verify_jl_descent(int f, const Toggles& t);
Report verify_llc_matrix_identities(int f, const Toggles& t, int precision = 60);

}  // namespace cond3

#endif  // COND3_DALG_H_
