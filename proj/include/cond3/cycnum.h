#ifndef COND3_CYCNUM_H_
#define COND3_CYCNUM_H_

#include <gmpxx.h>

#include <array>
#include <ostream>
#include <string>

namespace cond3 {

// Element of Q(z), z a primitive 24th root of unity, stored as sum c_i z^i
// (i < 8) reduced modulo Phi_24(x) = x^8 - x^4 + 1.
class CycNum {
 public:
  static constexpr int kDeg = 8;

  CycNum() = default;
  CycNum(long v) { c_[0] = v; }  // NOLINT(runtime/explicit)
  CycNum(const mpq_class& v) { c_[0] = v; }  // NOLINT(runtime/explicit)
  static CycNum Rational(long num, long den);

  const mpq_class& coeff(int i) const { return c_[i]; }
  void set_coeff(int i, const mpq_class& v) {
    c_[i] = v;
    c_[i].canonicalize();
  }

  CycNum operator+(const CycNum& o) const;
  CycNum operator-(const CycNum& o) const;
  CycNum operator-() const;
  CycNum operator*(const CycNum& o) const;
  CycNum operator/(const CycNum& o) const;
  CycNum& operator+=(const CycNum& o);
  CycNum& operator-=(const CycNum& o);
  CycNum& operator*=(const CycNum& o);
  bool operator==(const CycNum& o) const;
  bool operator!=(const CycNum& o) const { return !(*this == o); }

  bool is_zero() const;
  bool is_rational() const;
  CycNum inverse() const;
  CycNum pow(long e) const;
  // The automorphism z -> z^-1 (complex conjugation).
  CycNum conj() const;
  // Galois automorphism z -> z^k, gcd(k, 24) = 1.
  CycNum galois(int k) const;

  // "a0+a1*z+...+a7*z^7" with each a_i printed as p or p/q.
  std::string str() const;
  // Short human form, e.g. "-1/2" or the full string when irrational.
  std::string pretty() const;

 private:
  std::array<mpq_class, kDeg> c_;
};

inline std::ostream& operator<<(std::ostream& os, const CycNum& x) { return os << x.pretty(); }

// z^(24k/n) for n | 24.
CycNum zeta(int n, long k);
// i = z^6.
CycNum imag_unit();
// z8 + z8^3 (z8 = z^3); squares to -2.
CycNum sqrt_minus_two();
// z8 + z8^-1; squares to 2.
CycNum sqrt_two();
// The selected square root of -2: choice 0 is sqrt_minus_two(), 1 its negative.
CycNum sqrt_minus_two(int choice);
// (sqrt 2)^f.
CycNum sqrt_q(int f);
// 2^e for any integer e.
CycNum pow2(long e);

struct EtaPair {
  CycNum eta;
  CycNum eta_prime;
};
// Roots of x^2 + (-2)^((f+1)/2) x + q, f odd. eta = (-s + i*2^((f+1)/2))/2.
EtaPair eta_pair(int f);

}  // namespace cond3

#endif  // COND3_CYCNUM_H_
