#ifndef COND3_GF2K_H_
#define COND3_GF2K_H_

#include <cstdint>
#include <memory>
#include <vector>

#include "cond3/cycnum.h"
#include "cond3/report.h"

namespace cond3 {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

// F_{2^m} = F_2[x]/(p), elements as m-bit words. p is the smallest
// irreducible polynomial of degree m with nonzero constant term (as an
// integer), the generator the smallest element of order 2^m - 1.
class GF2Field {
 public:
  explicit GF2Field(int m);

  int m() const { return m_; }
  u64 mask() const { return mask_; }
  // Low m bits of the modulus (the x^m term is implicit).
  u64 tail() const { return tail_; }
  u64 generator() const { return gen_; }
  // 2^m - 1.
  u64 group_order() const { return mask_; }
  const std::vector<u64>& order_primes() const { return primes_; }

  u64 mul(u64 a, u64 b) const;
  u64 sqr(u64 a) const;
  u64 pow(u64 a, u64 e) const;
  u64 inv(u64 a) const;
  // a^(2^e), e taken mod m.
  u64 frob(u64 a, long e) const;
  // Relative trace and norm from this field to its subfield of degree s.
  u64 trace(u64 a, int s) const;
  u64 norm(u64 a, int s) const;
  // Trace and norm of a, lying in the subfield of degree `from`, down to the
  // subfield of degree `to` (to | from | m).
  u64 subtrace(u64 a, int from, int to) const;
  u64 subnorm(u64 a, int from, int to) const;
  // Absolute trace to F_2 (0 or 1).
  int abs_trace(u64 a) const;
  // Absolute trace of a, taken inside the subfield of degree s containing it.
  int sub_abs_trace(u64 a, int s) const { return static_cast<int>(subtrace(a, s, 1)); }
  bool in_subfield(u64 a, int s) const;
  // All elements of the subfield of degree s, increasing order (s <= 26).
  std::vector<u64> subfield_elements(int s) const;
  // Multiplicative order of a nonzero element.
  u64 order(u64 a) const;
  // Element of multiplicative order n (n | 2^m - 1): generator^((2^m-1)/n).
  u64 root_of_unity(u64 n) const;
  // Square root (unique in characteristic 2).
  u64 sqrt(u64 a) const { return frob(a, m_ - 1); }
  // Minimal polynomial over F_2, as a bit vector (bit i = coefficient of X^i).
  u128 min_poly(u64 a) const;
  // chi_2(Tr(a)) as +1 / -1.
  int add_char_sign(u64 a) const { return abs_trace(a) ? -1 : 1; }

 private:
  u64 reduce(u128 p) const;

  int m_;
  u64 mask_;
  u64 tail_;
  std::vector<int> tail_bits_;
  u64 gen_;
  u64 tmask_;
  std::vector<u64> primes_;
  // Log tables for m <= 16.
  std::vector<std::uint32_t> log_;
  std::vector<u64> exp_;
};

// Shared cached field of degree m (1 <= m <= 64).
const GF2Field& gf_make(int m);

// Element with its field; convenience wrapper used at API boundaries.
struct GF2Elem {
  const GF2Field* field = nullptr;
  u64 bits = 0;
  GF2Elem operator+(const GF2Elem& o) const { return {field, bits ^ o.bits}; }
  GF2Elem operator*(const GF2Elem& o) const { return {field, field->mul(bits, o.bits)}; }
  bool operator==(const GF2Elem& o) const { return field == o.field && bits == o.bits; }
};

// chi_2 o Tr_{F/F_2}.
CycNum add_char(const GF2Elem& x);

// Fixed ring embedding F_{2^m} -> F_{2^M}, m | M: the source generator goes to
// the target generator raised to (2^M-1)/(2^m-1) when that is a root of the
// source generator's minimal polynomial; otherwise to the first such power
// with exponent k(2^M-1)/(2^m-1), k > 1 (reported by power_multiplier()).
class Embedding {
 public:
  Embedding(int m, int M);
  u64 operator()(u64 x) const;
  int source_degree() const { return m_; }
  int target_degree() const { return M_; }
  u64 power_multiplier() const { return k_; }

 private:
  int m_, M_;
  u64 k_ = 1;
  std::vector<u64> col_;
};

const Embedding& embedding(int m, int M);
GF2Elem embed(const GF2Elem& x, int target_degree);

// Prime factors of n (n < 2^64), increasing.
std::vector<u64> prime_factors(u64 n);

// Exhaustive checks of the trace/norm facts over k = F_{2^f} inside k_2.
Report verify_trace_kernel_images(int f);

// F_2-linear solve of x^2 + x = rhs; returns false when Tr(rhs) = 1.
bool solve_artin_schreier(const GF2Field& F, u64 rhs, u64* root);

// Byte-sliced table for an F_2-linear map on F_{2^m}, m <= 32.
class LinearMap {
 public:
  LinearMap() = default;
  // images[i] = L(x^i).
  explicit LinearMap(const std::vector<u64>& images);
  u64 operator()(u64 x) const {
    u64 r = 0;
    for (std::size_t b = 0; b < tables_.size(); ++b) r ^= tables_[b][(x >> (8 * b)) & 0xff];
    return r;
  }

 private:
  std::vector<std::vector<u64>> tables_;
};

}  // namespace cond3

#endif  // COND3_GF2K_H_
