#include "cond3/gf2k.h"

#include <algorithm>
#include <array>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace cond3 {

namespace {

int Deg(u128 p) {
  u64 hi = static_cast<u64>(p >> 64), lo = static_cast<u64>(p);
  if (hi) return 127 - __builtin_clzll(hi);
  if (lo) return 63 - __builtin_clzll(lo);
  return -1;
}

u128 Clmul(u64 a, u64 b) {
  if (!a || !b) return 0;
  if (a < b) std::swap(a, b);
  u128 tab[16];
  tab[0] = 0;
  tab[1] = a;
  for (int i = 2; i < 16; ++i) tab[i] = (i & 1) ? (tab[i - 1] ^ a) : (tab[i / 2] << 1);
  int top = 63 - __builtin_clzll(b);
  u128 r = 0;
  for (int sh = top & ~3; sh >= 0; sh -= 4) r = (r << 4) ^ tab[(b >> sh) & 15];
  return r;
}

// Remainder of a modulo p (p of degree dp >= 1).
u128 PolyMod(u128 a, u128 p) {
  int dp = Deg(p);
  for (int d = Deg(a); d >= dp; d = Deg(a)) a ^= p << (d - dp);
  return a;
}

u128 PolyMulMod(u128 a, u128 b, u128 p) {
  return PolyMod(Clmul(static_cast<u64>(a), static_cast<u64>(b)), p);
}

u128 PolyGcd(u128 a, u128 b) {
  while (b != 0) {
    a = PolyMod(a, b);
    std::swap(a, b);
  }
  return a;
}

// Rabin's irreducibility test for p of degree m over F_2.
bool IsIrreducible(u128 p, int m) {
  if (m == 1) return true;
  u128 x = PolyMod(2, p);
  auto frob_pow = [&](int k) {
    u128 r = x;
    for (int i = 0; i < k; ++i) r = PolyMulMod(r, r, p);
    return r;
  };
  if (frob_pow(m) != x) return false;
  for (u64 r : prime_factors(static_cast<u64>(m))) {
    u128 t = frob_pow(m / static_cast<int>(r)) ^ x;
    if (Deg(PolyGcd(p, t)) != 0) return false;
  }
  return true;
}

u64 MulMod(u64 a, u64 b, u64 n) { return static_cast<u64>(static_cast<u128>(a) * b % n); }

u64 PowMod(u64 a, u64 e, u64 n) {
  u64 r = 1 % n;
  a %= n;
  while (e) {
    if (e & 1) r = MulMod(r, a, n);
    a = MulMod(a, a, n);
    e >>= 1;
  }
  return r;
}

bool IsPrime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while (d % 2 == 0) d /= 2, ++s;
  for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    u64 x = PowMod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool comp = true;
    for (int i = 1; i < s && comp; ++i) {
      x = MulMod(x, x, n);
      if (x == n - 1) comp = false;
    }
    if (comp) return false;
  }
  return true;
}

u64 Rho(u64 n) {
  if (n % 2 == 0) return 2;
  for (u64 c = 1;; ++c) {
    u64 x = 2, y = 2, d = 1;
    auto g = [&](u64 v) { return (MulMod(v, v, n) + c) % n; };
    while (d == 1) {
      x = g(x);
      y = g(g(y));
      d = std::gcd(x > y ? x - y : y - x, n);
    }
    if (d != n) return d;
  }
}

void Factor(u64 n, std::set<u64>& out) {
  if (n == 1) return;
  for (u64 p : {2, 3, 5, 7, 11, 13}) {
    if (n % p == 0) {
      out.insert(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n == 1) return;
  if (IsPrime(n)) {
    out.insert(n);
    return;
  }
  u64 d = Rho(n);
  Factor(d, out);
  Factor(n / d, out);
}

// Solves sum_i c_i cols[i] = rhs over F_2 (nrows equations). Free variables are 0.
bool SolveF2(const std::vector<u64>& cols, int nrows, u64 rhs, u64* sol) {
  int n = static_cast<int>(cols.size());
  std::vector<u64> row(nrows);
  std::vector<int> rb(nrows);
  for (int r = 0; r < nrows; ++r) {
    u64 bits = 0;
    for (int i = 0; i < n; ++i) bits |= ((cols[i] >> r) & 1) << i;
    row[r] = bits;
    rb[r] = (rhs >> r) & 1;
  }
  std::vector<int> pivot_col;
  int rank = 0;
  for (int c = 0; c < n && rank < nrows; ++c) {
    int p = rank;
    while (p < nrows && !((row[p] >> c) & 1)) ++p;
    if (p == nrows) continue;
    std::swap(row[p], row[rank]);
    std::swap(rb[p], rb[rank]);
    for (int r = 0; r < nrows; ++r) {
      if (r != rank && ((row[r] >> c) & 1)) {
        row[r] ^= row[rank];
        rb[r] ^= rb[rank];
      }
    }
    pivot_col.push_back(c);
    ++rank;
  }
  for (int r = rank; r < nrows; ++r)
    if (rb[r]) return false;
  u64 x = 0;
  for (int r = 0; r < rank; ++r)
    if (rb[r]) x |= u64{1} << pivot_col[r];
  *sol = x;
  return true;
}

const std::array<std::uint16_t, 256>& SpreadTable() {
  static const std::array<std::uint16_t, 256> t = [] {
    std::array<std::uint16_t, 256> s{};
    for (int v = 0; v < 256; ++v) {
      std::uint16_t r = 0;
      for (int b = 0; b < 8; ++b)
        if ((v >> b) & 1) r |= static_cast<std::uint16_t>(1u << (2 * b));
      s[v] = r;
    }
    return s;
  }();
  return t;
}

}  // namespace

std::vector<u64> prime_factors(u64 n) {
  std::set<u64> s;
  Factor(n, s);
  return {s.begin(), s.end()};
}

GF2Field::GF2Field(int m) : m_(m) {
  if (m < 1 || m > 64) throw std::invalid_argument("gf_make: degree out of range");
  mask_ = m == 64 ? ~u64{0} : ((u64{1} << m) - 1);
  if (m == 1) {
    tail_ = 1;  // x + 1
  } else {
    u128 top = static_cast<u128>(1) << m;
    bool found = false;
    for (u64 t = 1; !found; t += 2) {
      if (IsIrreducible(top | t, m)) {
        tail_ = t;
        found = true;
      }
    }
  }
  for (int b = 0; b < m_; ++b)
    if ((tail_ >> b) & 1) tail_bits_.push_back(b);
  primes_ = prime_factors(mask_);
  if (m_ == 1) {
    gen_ = 1;
  } else {
    // Temporary generator so that pow() works during the search.
    gen_ = 0;
    for (u64 g = 2;; ++g) {
      bool full = true;
      for (u64 p : primes_)
        if (pow(g, mask_ / p) == 1) {
          full = false;
          break;
        }
      if (full) {
        gen_ = g;
        break;
      }
    }
  }
  if (m_ <= 16) {
    u64 n = mask_;
    exp_.assign(2 * n + 1, 0);
    log_.assign(n + 1, 0);
    u64 v = 1;
    for (u64 i = 0; i < n; ++i) {
      exp_[i] = v;
      exp_[i + n] = v;
      log_[v] = static_cast<std::uint32_t>(i);
      v = reduce(Clmul(v, gen_));
    }
    if (v != 1) throw std::logic_error("gf_make: generator order check failed");
  }
  tmask_ = 0;
  for (int i = 0; i < m_; ++i) {
    u64 xi = m_ == 1 ? 1 : reduce(static_cast<u128>(1) << i);
    u64 t = 0, y = xi;
    for (int j = 0; j < m_; ++j) {
      t ^= y;
      y = sqr(y);
    }
    if (t > 1) throw std::logic_error("gf_make: trace not in F_2");
    tmask_ |= t << i;
  }
}

u64 GF2Field::reduce(u128 p) const {
  while (true) {
    u128 hi = p >> m_;
    if (hi == 0) return static_cast<u64>(p);
    p &= mask_;
    for (int b : tail_bits_) p ^= hi << b;
  }
}

u64 GF2Field::mul(u64 a, u64 b) const {
  if (!a || !b) return 0;
  if (!log_.empty()) return exp_[log_[a] + log_[b]];
  return reduce(Clmul(a, b));
}

u64 GF2Field::sqr(u64 a) const {
  if (!log_.empty()) return a ? exp_[2 * static_cast<u64>(log_[a])] : 0;
  const auto& sp = SpreadTable();
  u128 r = 0;
  for (int b = 0; b < 8; ++b) r |= static_cast<u128>(sp[(a >> (8 * b)) & 0xff]) << (16 * b);
  return reduce(r);
}

u64 GF2Field::pow(u64 a, u64 e) const {
  u64 r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    e >>= 1;
    if (e) a = sqr(a);
  }
  return r;
}

u64 GF2Field::inv(u64 a) const {
  if (!a) throw std::domain_error("GF2Field::inv: zero");
  if (!log_.empty()) return exp_[(mask_ - log_[a]) % mask_];
  return pow(a, mask_ - 1);
}

u64 GF2Field::frob(u64 a, long e) const {
  e %= m_;
  if (e < 0) e += m_;
  for (long i = 0; i < e; ++i) a = sqr(a);
  return a;
}

u64 GF2Field::subtrace(u64 a, int from, int to) const {
  if (to <= 0 || from % to || m_ % from) throw std::invalid_argument("trace: invalid subfield degree");
  u64 r = 0;
  for (int i = 0; i < from / to; ++i) {
    r ^= a;
    a = frob(a, to);
  }
  return r;
}

u64 GF2Field::subnorm(u64 a, int from, int to) const {
  if (to <= 0 || from % to || m_ % from) throw std::invalid_argument("norm: invalid subfield degree");
  u64 r = 1;
  for (int i = 0; i < from / to; ++i) {
    r = mul(r, a);
    a = frob(a, to);
  }
  return r;
}

u64 GF2Field::trace(u64 a, int s) const { return subtrace(a, m_, s); }

u64 GF2Field::norm(u64 a, int s) const { return subnorm(a, m_, s); }

int GF2Field::abs_trace(u64 a) const { return __builtin_popcountll(a & tmask_) & 1; }

bool GF2Field::in_subfield(u64 a, int s) const {
  if (m_ % s) return false;
  return frob(a, s) == a;
}

std::vector<u64> GF2Field::subfield_elements(int s) const {
  if (s <= 0 || m_ % s) throw std::invalid_argument("subfield_elements: s must divide m");
  if (s > 26) throw std::invalid_argument("subfield_elements: subfield too large to enumerate");
  u64 n = (u64{1} << s) - 1;
  u64 h = root_of_unity(n);
  std::vector<u64> out;
  out.reserve(n + 1);
  out.push_back(0);
  u64 v = 1;
  for (u64 i = 0; i < n; ++i) {
    out.push_back(v);
    v = mul(v, h);
  }
  std::sort(out.begin(), out.end());
  return out;
}

u64 GF2Field::order(u64 a) const {
  if (!a) throw std::domain_error("order of zero");
  u64 n = mask_;
  for (u64 p : primes_)
    while (n % p == 0 && pow(a, n / p) == 1) n /= p;
  return n;
}

u64 GF2Field::root_of_unity(u64 n) const {
  if (n == 0 || mask_ % n) throw std::invalid_argument("root_of_unity: n does not divide 2^m-1");
  return pow(gen_, mask_ / n);
}

u128 GF2Field::min_poly(u64 a) const {
  // Product of (X - a^(2^i)) over the distinct conjugates, coefficients in F_2.
  std::vector<u64> conj{a};
  for (u64 c = sqr(a); c != a; c = sqr(c)) conj.push_back(c);
  std::vector<u64> poly{1};
  for (u64 c : conj) {
    std::vector<u64> next(poly.size() + 1, 0);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] ^= poly[i];
      next[i] ^= mul(poly[i], c);
    }
    poly.swap(next);
  }
  u128 bits = 0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    if (poly[i] > 1) throw std::logic_error("min_poly: coefficient outside F_2");
    if (poly[i]) bits |= static_cast<u128>(1) << i;
  }
  return bits;
}

const GF2Field& gf_make(int m) {
  if (m < 1 || m > 64) throw std::invalid_argument("gf_make: degree out of range");
  static std::mutex mu;
  static std::map<int, std::unique_ptr<GF2Field>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[m];
  if (!slot) slot = std::make_unique<GF2Field>(m);
  return *slot;
}

CycNum add_char(const GF2Elem& x) { return CycNum(x.field->add_char_sign(x.bits)); }

Embedding::Embedding(int m, int M) : m_(m), M_(M) {
  if (m < 1 || M < 1 || M % m) throw std::invalid_argument("embed: source degree must divide target degree");
  const GF2Field& F = gf_make(m);
  const GF2Field& G = gf_make(M);
  if (m == 1) {
    col_ = {1};
    return;
  }
  u64 c = G.group_order() / F.group_order();
  u128 mp = F.min_poly(F.generator());
  u64 base = G.pow(G.generator(), c);
  u64 h = 0;
  for (k_ = 1;; ++k_) {
    if (std::gcd(k_, F.group_order()) != 1) continue;
    u64 cand = G.pow(base, k_);
    u64 val = 0, p = 1;
    for (int i = 0; i <= m; ++i) {
      if ((mp >> i) & 1) val ^= p;
      p = G.mul(p, cand);
    }
    if (val == 0) {
      h = cand;
      break;
    }
    if (k_ > (u64{1} << 22)) throw ResourceBound("embed: generator-power search exceeded 2^22 steps");
  }
  // x = sum c_i g^i in the source; its image is sum c_i h^i.
  std::vector<u64> cols(m);
  u64 gp = 1;
  for (int i = 0; i < m; ++i) {
    cols[i] = gp;
    gp = F.mul(gp, F.generator());
  }
  u64 coeffs = 0;
  if (!SolveF2(cols, m, 2, &coeffs)) throw std::logic_error("embed: generator powers not a basis");
  u64 X = 0, hp = 1;
  for (int i = 0; i < m; ++i) {
    if ((coeffs >> i) & 1) X ^= hp;
    hp = G.mul(hp, h);
  }
  col_.resize(m);
  u64 xp = 1;
  for (int j = 0; j < m; ++j) {
    col_[j] = xp;
    xp = G.mul(xp, X);
  }
}

u64 Embedding::operator()(u64 x) const {
  u64 r = 0;
  for (int j = 0; j < m_; ++j)
    if ((x >> j) & 1) r ^= col_[j];
  return r;
}

const Embedding& embedding(int m, int M) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<Embedding>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{m, M}];
  if (!slot) slot = std::make_unique<Embedding>(m, M);
  return *slot;
}

GF2Elem embed(const GF2Elem& x, int target_degree) {
  const Embedding& e = embedding(x.field->m(), target_degree);
  return {&gf_make(target_degree), e(x.bits)};
}

bool solve_artin_schreier(const GF2Field& F, u64 rhs, u64* root) {
  std::vector<u64> cols(F.m());
  for (int i = 0; i < F.m(); ++i) {
    u64 xi = F.m() == 1 ? 1 : (u64{1} << i);
    cols[i] = F.sqr(xi) ^ xi;
  }
  u64 x;
  if (!SolveF2(cols, F.m(), rhs, &x)) return false;
  if ((F.sqr(x) ^ x) != rhs) throw std::logic_error("solve_artin_schreier: bad solution");
  *root = x;
  return true;
}

LinearMap::LinearMap(const std::vector<u64>& images) {
  std::size_t nbytes = (images.size() + 7) / 8;
  tables_.assign(nbytes, std::vector<u64>(256, 0));
  for (std::size_t b = 0; b < nbytes; ++b) {
    for (int v = 1; v < 256; ++v) {
      int low = __builtin_ctz(v);
      std::size_t idx = 8 * b + low;
      u64 img = idx < images.size() ? images[idx] : 0;
      tables_[b][v] = tables_[b][v & (v - 1)] ^ img;
    }
  }
}

Report verify_trace_kernel_images(int f) {
  Report rep;
  if (f < 1 || f > 12) {
    rep.skip("gf2k.trace_kernel", "trace kernel and image of N2", f, "f=" + std::to_string(f),
             "supported for 1 <= f <= 12");
    return rep;
  }
  const GF2Field& K2 = gf_make(2 * f);
  const std::string in = "f=" + std::to_string(f);
  std::vector<u64> fr(2 * f);
  for (int i = 0; i < 2 * f; ++i) fr[i] = K2.frob(u64{1} << i, f);
  LinearMap frob_q(fr);
  std::vector<u64> k = K2.subfield_elements(f);

  // (a) Ker Tr_{k/F2} = {xi + xi^2}.
  std::vector<u64> ker, as_image;
  for (u64 x : k) {
    if (K2.subtrace(x, f, 1) == 0) ker.push_back(x);
    as_image.push_back(x ^ K2.sqr(x));
  }
  std::sort(as_image.begin(), as_image.end());
  as_image.erase(std::unique(as_image.begin(), as_image.end()), as_image.end());
  rep.expect("gf2k.kernel_trace_is_as_image", "Ker Tr_{k/F2} = {xi + xi^2 : xi in k}", f, in,
             "equal sets of size " + std::to_string(k.size() / 2),
             "kernel size " + std::to_string(ker.size()) + ", image size " + std::to_string(as_image.size()),
             ker == as_image && ker.size() * 2 == k.size());

  // (b), (c), (d) over all of k2.
  std::vector<char> hit(k.size(), 0);
  auto pos = [&](u64 v) { return std::lower_bound(k.begin(), k.end(), v) - k.begin(); };
  long bad_c = 0, bad_d = 0;
  u64 wit_c = 0, wit_d = 0;
  bool n2_in_k = true;
  u64 n = K2.mask();
  for (u64 x = 0; x <= n; ++x) {
    u64 xq = frob_q(x);
    u64 t = x ^ xq;
    u64 n2 = K2.sqr(t) ^ t;
    auto p = pos(n2);
    if (p >= static_cast<long>(k.size()) || k[p] != n2)
      n2_in_k = false;
    else
      hit[p] = 1;
    u64 x2 = K2.sqr(x), x4 = K2.sqr(x2);
    u64 lhs_c = x2 ^ x4 ^ frob_q(x2 ^ x4);
    u64 t2 = K2.sqr(t);
    if (lhs_c != (t2 ^ K2.sqr(t2))) {
      if (!bad_c++) wit_c = x;
    }
    u64 x3 = K2.mul(x2, x);
    u64 tr_x3 = x3 ^ frob_q(x3);
    u64 y = x2 ^ x4;
    u64 nr_y = K2.mul(y, frob_q(y));
    u64 nxq1 = K2.mul(x, xq);  // xi^(q+1) = Nr(xi)
    u64 nr_x2 = K2.sqr(nxq1);
    u64 inner = nr_x2 ^ K2.mul(nxq1, t);
    u64 rhs = K2.mul(K2.sqr(t), t) ^ inner ^ K2.sqr(inner);
    if ((tr_x3 ^ nr_y) != rhs) {
      if (!bad_d++) wit_d = x;
    }
    if (x == n) break;
  }
  std::vector<u64> img;
  for (std::size_t i = 0; i < k.size(); ++i)
    if (hit[i]) img.push_back(k[i]);
  rep.expect("gf2k.image_N2_is_kernel", "Image N2 = Ker Tr_{k/F2}", f, in,
             "image of size " + std::to_string(ker.size()) + " equal to the kernel",
             "image size " + std::to_string(img.size()) + (n2_in_k ? "" : ", values outside k"),
             n2_in_k && img == ker);
  std::ostringstream wc, wd;
  wc << bad_c << " counterexamples" << (bad_c ? ", first bits=" + std::to_string(wit_c) : "");
  wd << bad_d << " counterexamples" << (bad_d ? ", first bits=" + std::to_string(wit_d) : "");
  rep.expect("gf2k.trace_frobenius_commute", "Tr_{k2/k}(xi^2+xi^4) = Tr(xi)^2 + Tr(xi)^4", f, in,
             "0 counterexamples", wc.str(), bad_c == 0);
  rep.expect("gf2k.trace_norm_identity",
             "Tr(xi^3) + Nr(xi^2+xi^4) = Tr(xi)^3 + (Nr(xi^2) + xi^(q+1)Tr(xi)) + (...)^2 on k2", f,
             in, "0 counterexamples", wd.str(), bad_d == 0);
  return rep;
}

}  // namespace cond3
