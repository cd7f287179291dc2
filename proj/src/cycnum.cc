#include "cond3/cycnum.h"

#include <stdexcept>
#include <vector>

namespace cond3 {

namespace {

// Reduce a coefficient vector of length <= 15 modulo x^8 - x^4 + 1.
void ReduceInto(std::vector<mpq_class>& v, std::array<mpq_class, 8>& out) {
  for (int k = static_cast<int>(v.size()) - 1; k >= 8; --k) {
    if (v[k] == 0) continue;
    v[k - 4] += v[k];
    v[k - 8] -= v[k];
    v[k] = 0;
  }
  for (int i = 0; i < 8; ++i) out[i] = i < static_cast<int>(v.size()) ? v[i] : 0;
}

// z^j reduced, j in [0, 24).
const std::array<CycNum, 24>& PowerTable() {
  static const std::array<CycNum, 24> table = [] {
    std::array<CycNum, 24> t;
    CycNum z;
    z.set_coeff(1, 1);
    t[0] = CycNum(1);
    for (int j = 1; j < 24; ++j) t[j] = t[j - 1] * z;
    return t;
  }();
  return table;
}

std::string RatStr(const mpq_class& q) { return q.get_str(); }

}  // namespace

CycNum CycNum::Rational(long num, long den) {
  if (den == 0) throw std::domain_error("zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return CycNum(q);
}

CycNum CycNum::operator+(const CycNum& o) const {
  CycNum r = *this;
  r += o;
  return r;
}

CycNum CycNum::operator-(const CycNum& o) const {
  CycNum r = *this;
  r -= o;
  return r;
}

CycNum CycNum::operator-() const {
  CycNum r;
  for (int i = 0; i < kDeg; ++i) r.c_[i] = -c_[i];
  return r;
}

CycNum& CycNum::operator+=(const CycNum& o) {
  for (int i = 0; i < kDeg; ++i) c_[i] += o.c_[i];
  return *this;
}

CycNum& CycNum::operator-=(const CycNum& o) {
  for (int i = 0; i < kDeg; ++i) c_[i] -= o.c_[i];
  return *this;
}

CycNum CycNum::operator*(const CycNum& o) const {
  std::vector<mpq_class> prod(2 * kDeg - 1);
  for (int i = 0; i < kDeg; ++i) {
    if (c_[i] == 0) continue;
    for (int j = 0; j < kDeg; ++j) {
      if (o.c_[j] == 0) continue;
      prod[i + j] += c_[i] * o.c_[j];
    }
  }
  CycNum r;
  ReduceInto(prod, r.c_);
  return r;
}

CycNum& CycNum::operator*=(const CycNum& o) {
  *this = *this * o;
  return *this;
}

CycNum CycNum::operator/(const CycNum& o) const { return *this * o.inverse(); }

bool CycNum::operator==(const CycNum& o) const {
  for (int i = 0; i < kDeg; ++i)
    if (c_[i] != o.c_[i]) return false;
  return true;
}

bool CycNum::is_zero() const {
  for (const auto& c : c_)
    if (c != 0) return false;
  return true;
}

bool CycNum::is_rational() const {
  for (int i = 1; i < kDeg; ++i)
    if (c_[i] != 0) return false;
  return true;
}

CycNum CycNum::inverse() const {
  if (is_zero()) throw std::domain_error("CycNum: division by zero");
  if (is_rational()) return CycNum(mpq_class(1) / c_[0]);
  // Solve (a * x) = 1 as an 8x8 linear system; column j is a * z^j.
  const auto& pw = PowerTable();
  mpq_class m[kDeg][kDeg + 1];
  for (int j = 0; j < kDeg; ++j) {
    CycNum col = *this * pw[j];
    for (int i = 0; i < kDeg; ++i) m[i][j] = col.c_[i];
  }
  for (int i = 0; i < kDeg; ++i) m[i][kDeg] = (i == 0) ? 1 : 0;
  for (int col = 0; col < kDeg; ++col) {
    int piv = col;
    while (piv < kDeg && m[piv][col] == 0) ++piv;
    if (piv == kDeg) throw std::domain_error("CycNum: singular multiplication map");
    if (piv != col)
      for (int k = 0; k <= kDeg; ++k) std::swap(m[piv][k], m[col][k]);
    mpq_class inv = mpq_class(1) / m[col][col];
    for (int k = col; k <= kDeg; ++k) m[col][k] *= inv;
    for (int i = 0; i < kDeg; ++i) {
      if (i == col || m[i][col] == 0) continue;
      mpq_class factor = m[i][col];
      for (int k = col; k <= kDeg; ++k) m[i][k] -= factor * m[col][k];
    }
  }
  CycNum r;
  for (int i = 0; i < kDeg; ++i) r.c_[i] = m[i][kDeg];
  return r;
}

CycNum CycNum::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  CycNum result(1), base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

CycNum CycNum::galois(int k) const {
  k %= 24;
  if (k < 0) k += 24;
  if (k % 2 == 0 || k % 3 == 0) throw std::invalid_argument("galois: k not a unit mod 24");
  const auto& pw = PowerTable();
  CycNum r;
  for (int i = 0; i < kDeg; ++i) {
    if (c_[i] == 0) continue;
    CycNum t = pw[(i * k) % 24];
    for (int j = 0; j < kDeg; ++j) r.c_[j] += c_[i] * t.c_[j];
  }
  return r;
}

CycNum CycNum::conj() const { return galois(23); }

std::string CycNum::str() const {
  std::string s;
  for (int i = 0; i < kDeg; ++i) {
    if (i) s += "+";
    s += RatStr(c_[i]);
    if (i == 1) s += "*z";
    if (i > 1) s += "*z^" + std::to_string(i);
  }
  return s;
}

std::string CycNum::pretty() const {
  if (is_rational()) return RatStr(c_[0]);
  return str();
}

CycNum zeta(int n, long k) {
  if (n <= 0 || 24 % n != 0) throw std::invalid_argument("zeta: unsupported root of unity order");
  long e = (24 / n) * k % 24;
  if (e < 0) e += 24;
  return PowerTable()[e];
}

CycNum imag_unit() { return zeta(4, 1); }

CycNum sqrt_minus_two() { return zeta(8, 1) + zeta(8, 3); }

CycNum sqrt_two() { return zeta(8, 1) + zeta(8, -1); }

CycNum sqrt_minus_two(int choice) { return choice == 0 ? sqrt_minus_two() : -sqrt_minus_two(); }

CycNum sqrt_q(int f) { return sqrt_two().pow(f); }

CycNum pow2(long e) {
  mpq_class q(1);
  if (e >= 0)
    mpz_mul_2exp(q.get_num_mpz_t(), q.get_num_mpz_t(), e);
  else
    mpz_mul_2exp(q.get_den_mpz_t(), q.get_den_mpz_t(), -e);
  return CycNum(q);
}

EtaPair eta_pair(int f) {
  if (f <= 0 || f % 2 == 0) throw std::invalid_argument("eta_pair: f must be odd");
  // s = (-2)^((f+1)/2) is a rational integer; discriminant s^2 - 4q = -2^(f+1).
  long h = (f + 1) / 2;
  CycNum s = CycNum(-2).pow(h);
  CycNum root = imag_unit() * pow2(h);
  CycNum half = CycNum::Rational(1, 2);
  return {(-s + root) * half, (-s - root) * half};
}

}  // namespace cond3
