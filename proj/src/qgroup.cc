#include "cond3/qgroup.h"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cond3 {

namespace {

constexpr F4 kLog[4] = {0, 0, 1, 2};
constexpr F4 kExp[3] = {1, 2, 3};

long FloorDiv(long a, long b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }

const char* F4Name(F4 v) {
  static const char* names[4] = {"0", "1", "z", "z^2"};
  return names[v & 3];
}

}  // namespace

F4 f4_mul(F4 a, F4 b) {
  if (!a || !b) return 0;
  return kExp[(kLog[a] + kLog[b]) % 3];
}

F4 f4_inv(F4 a) {
  if (!a) throw std::domain_error("f4_inv: zero");
  return kExp[(3 - kLog[a]) % 3];
}

F4 f4_sqr(F4 a) { return f4_mul(a, a); }

std::string Toggles::label() const {
  std::ostringstream os;
  os << "g" << gamma0 << "z" << zeta3 << "s" << sqrt_minus_two;
  return os.str();
}

std::vector<Toggles> toggle_sweep(const std::string& mode) {
  std::vector<int> vals;
  if (mode == "first") {
    vals = {0};
  } else if (mode == "second") {
    vals = {1};
  } else if (mode == "both") {
    vals = {0, 1};
  } else {
    throw std::invalid_argument("toggle sweep must be first, second or both");
  }
  std::vector<Toggles> out;
  for (int g : vals)
    for (int z : vals)
      for (int s : vals) out.push_back(Toggles{g, z, s});
  return out;
}

bool QElem::operator<(const QElem& o) const {
  return std::tie(a, b, c) < std::tie(o.a, o.b, o.c);
}

bool QElem::valid() const {
  if (a == 0 || a > 3 || b > 3 || c > 3) return false;
  F4 lhs = f4_mul(a, f4_sqr(c)) ^ f4_mul(f4_sqr(a), c);
  return lhs == f4_mul(b, f4_sqr(b));
}

std::string QElem::str() const {
  return std::string("g(") + F4Name(a) + "," + F4Name(b) + "," + F4Name(c) + ")";
}

QElem q_mul(const QElem& x, const QElem& y) {
  QElem r;
  r.a = f4_mul(x.a, y.a);
  r.b = f4_mul(x.a, y.b) ^ f4_mul(x.b, f4_sqr(y.a));
  r.c = f4_mul(x.a, y.c) ^ f4_mul(x.b, f4_sqr(y.b)) ^ f4_mul(x.c, y.a);
  return r;
}

QElem q_inv(const QElem& x) {
  for (const QElem& y : q_elements())
    if (q_mul(x, y) == QElem{}) return y;
  throw std::logic_error("q_inv: no inverse");
}

QElem q_frob(const QElem& x, long e) {
  if (((e % 2) + 2) % 2 == 0) return x;
  return QElem{f4_sqr(x.a), f4_sqr(x.b), f4_sqr(x.c)};
}

const std::vector<QElem>& q_elements() {
  static const std::vector<QElem> elems = [] {
    std::vector<QElem> v;
    for (F4 a = 1; a < 4; ++a)
      for (F4 b = 0; b < 4; ++b)
        for (F4 c = 0; c < 4; ++c) {
          QElem g{a, b, c};
          if (g.valid()) v.push_back(g);
        }
    return v;
  }();
  return elems;
}

int q_index(const QElem& x) {
  const auto& e = q_elements();
  auto it = std::lower_bound(e.begin(), e.end(), x);
  if (it == e.end() || !(*it == x)) throw std::invalid_argument("q_index: not an element of Q");
  return static_cast<int>(it - e.begin());
}

std::string GradedQElem::str() const { return "(" + g.str() + "," + std::to_string(n) + ")"; }

GradedQElem graded_mul(const GradedQElem& x, const GradedQElem& y, int f) {
  return {q_mul(x.g, q_frob(y.g, static_cast<long>(f) * x.n)), x.n + y.n};
}

GradedQElem graded_inv(const GradedQElem& x, int f) {
  return {q_frob(q_inv(x.g), -static_cast<long>(f) * x.n), -x.n};
}

GradedQElem graded_pow(const GradedQElem& x, long e, int f) {
  GradedQElem base = e >= 0 ? x : graded_inv(x, f);
  if (e < 0) e = -e;
  GradedQElem r{QElem{}, 0};
  for (long i = 0; i < e; ++i) r = graded_mul(r, base, f);
  return r;
}

const char* SubgroupLabel(SubgroupName s, bool graded) {
  switch (s) {
    case SubgroupName::kQ: return graded ? "Q x| Z" : "Q";
    case SubgroupName::kQ8: return graded ? "Q8 x| Z" : "Q8";
    case SubgroupName::kC4: return graded ? "C4 x| Z" : "C4";
    case SubgroupName::kZ: return graded ? "Z x| Z" : "Z";
    case SubgroupName::kC3: return graded ? "C3 x| Z" : "C3";
    case SubgroupName::kC6: return graded ? "C6 x| Z" : "C6";
    case SubgroupName::kC: return "C";
    case SubgroupName::kCprime: return "C'";
    case SubgroupName::kCdoubleprime: return "C''";
    case SubgroupName::kFull: return "Q x| Z";
  }
  return "?";
}

GradedGroup::GradedGroup(int f, const Toggles& t)
    : f_(f), period_(f > 0 && f % 2 ? 8 : 1), toggles_(t) {
  if (f < 0) throw std::invalid_argument("GradedGroup: f must be >= 0");
  int n = size();
  mul_.assign(n * n, 0);
  mul_carry_.assign(n * n, 0);
  inv_.assign(n, 0);
  inv_carry_.assign(n, 0);
  for (int x = 0; x < n; ++x) {
    GradedQElem ex = elem(x);
    long c;
    inv_[x] = id_of(graded_inv(ex, f_), &c);
    inv_carry_[x] = static_cast<int>(c);
    for (int y = 0; y < n; ++y) {
      mul_[x * n + y] = id_of(graded_mul(ex, elem(y), f_), &c);
      mul_carry_[x * n + y] = static_cast<int>(c);
    }
  }
}

int GradedGroup::id_of(const QElem& g, long n0) const {
  return static_cast<int>(n0) * 24 + q_index(g);
}

int GradedGroup::id_of(const GradedQElem& x, long* carry) const {
  long c = FloorDiv(x.n, period_);
  *carry = c;
  return id_of(x.g, x.n - c * period_);
}

GradedQElem GradedGroup::elem(int id) const { return {q_elements()[id % 24], id / 24}; }

int GradedGroup::mul(int x, int y, int* carry) const {
  *carry = mul_carry_[x * size() + y];
  return mul_[x * size() + y];
}

int GradedGroup::inv(int x, int* carry) const {
  *carry = inv_carry_[x];
  return inv_[x];
}

int GradedGroup::conj(int y, int x) const { return mul(mul(y, x), inv(y)); }

QElem GradedGroup::x_gen() const {
  F4 z = zeta3_of(toggles_);
  return QElem{1, z, z};
}

Subgroup GradedGroup::from_list(const std::string& name, std::vector<int> ids) const {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  Subgroup h;
  h.name = name;
  h.mask.assign(size(), 0);
  for (int i : ids) h.mask[i] = 1;
  h.elems = std::move(ids);
  if (!is_subgroup(h)) throw std::logic_error("subgroup " + name + " is not closed");
  return h;
}

Subgroup GradedGroup::subgroup(SubgroupName s, bool graded) const {
  auto in_q8 = [](const QElem& g) { return g.a == 1; };
  auto in_c4 = [](const QElem& g) { return g.a == 1 && (g.b == 1 || g.b == 0); };
  auto in_z = [](const QElem& g) { return g.a == 1 && g.b == 0; };
  auto in_c3 = [](const QElem& g) { return g.b == 0 && g.c == 0; };
  auto in_c6 = [](const QElem& g) { return g.b == 0 && (g.c == 0 || g.c == g.a); };
  std::vector<int> ids;
  const bool odd = graded && f_ % 2 == 1;
  if (s == SubgroupName::kC || s == SubgroupName::kCprime || s == SubgroupName::kCdoubleprime) {
    if (!odd) throw std::invalid_argument(std::string(SubgroupLabel(s, true)) + " requires f odd");
  }
  if (!graded && period_ != 1)
    throw std::invalid_argument("ungraded subgroups need the quotient with period 1");
  switch (s) {
    case SubgroupName::kC: {
      for (int id = 0; id < size(); ++id) {
        GradedQElem e = elem(id);
        if (!in_q8(e.g)) continue;
        if ((e.n % 2 == 0) == in_c4(e.g)) ids.push_back(id);
      }
      break;
    }
    case SubgroupName::kCprime: {
      GradedQElem gen{x_gen(), 1};
      GradedQElem p{QElem{}, 0};
      for (int j = 0; j < period_; ++j) {
        long c;
        ids.push_back(id_of(p, &c));
        p = graded_mul(p, gen, f_);
      }
      break;
    }
    case SubgroupName::kCdoubleprime:
      ids = {identity(), id_of(QElem{1, 0, 1}, 4)};
      break;
    default: {
      for (int id = 0; id < size(); ++id) {
        const QElem& g = elem(id).g;
        bool in = false;
        switch (s) {
          case SubgroupName::kQ:
          case SubgroupName::kFull: in = true; break;
          case SubgroupName::kQ8: in = in_q8(g); break;
          case SubgroupName::kC4: in = in_c4(g); break;
          case SubgroupName::kZ: in = in_z(g); break;
          case SubgroupName::kC3: in = in_c3(g); break;
          case SubgroupName::kC6: in = in_c6(g); break;
          default: break;
        }
        if (in) ids.push_back(id);
      }
    }
  }
  return from_list(SubgroupLabel(s, graded), ids);
}

bool GradedGroup::is_subgroup(const Subgroup& h) const {
  if (h.elems.empty() || !h.contains(identity())) return false;
  for (int x : h.elems) {
    if (!h.contains(inv(x))) return false;
    for (int y : h.elems)
      if (!h.contains(mul(x, y))) return false;
  }
  return true;
}

std::vector<DoubleCoset> GradedGroup::double_cosets(const Subgroup& h, const Subgroup& k) const {
  std::vector<char> seen(size(), 0);
  std::vector<DoubleCoset> out;
  for (int x = 0; x < size(); ++x) {
    if (seen[x]) continue;
    DoubleCoset dc{x, 0, {}};
    for (int a : h.elems)
      for (int b : k.elems) {
        int y = mul(mul(a, x), b);
        if (!seen[y]) {
          seen[y] = 1;
          ++dc.size;
        }
      }
    for (int b : k.elems) {
      int y = conj(x, b);
      if (h.contains(y)) dc.intersection.push_back(y);
    }
    std::sort(dc.intersection.begin(), dc.intersection.end());
    out.push_back(std::move(dc));
  }
  return out;
}

bool GradedGroup::same_double_coset(const Subgroup& h, const Subgroup& k, int x, int y) const {
  for (int a : h.elems)
    for (int b : k.elems)
      if (mul(mul(a, x), b) == y) return true;
  return false;
}

std::vector<std::vector<int>> GradedGroup::conjugacy_classes() const {
  std::vector<char> seen(size(), 0);
  std::vector<std::vector<int>> out;
  for (int x = 0; x < size(); ++x) {
    if (seen[x]) continue;
    std::vector<int> cls;
    for (int y = 0; y < size(); ++y) {
      int c = conj(y, x);
      if (!seen[c]) {
        seen[c] = 1;
        cls.push_back(c);
      }
    }
    std::sort(cls.begin(), cls.end());
    out.push_back(std::move(cls));
  }
  return out;
}

bool express_in_cyclic(const GradedQElem& generator, const GradedQElem& target, long period,
                       int f, CyclicExponent* out) {
  GradedQElem p{QElem{}, 0};
  for (long e = 0; e <= 24 * period * 8; ++e) {
    long diff = p.n - target.n;
    if (p.g == target.g && diff % period == 0) {
      out->e = e;
      out->k = diff / period;
      return true;
    }
    p = graded_mul(p, generator, f);
  }
  return false;
}

}  // namespace cond3

namespace cond3 {

namespace {

std::string Ids(const GradedGroup& G, const std::vector<int>& ids) {
  std::string s = "{";
  for (std::size_t i = 0; i < ids.size(); ++i) s += (i ? ", " : "") + G.elem(ids[i]).str();
  return s + "}";
}

}  // namespace

Report verify_qgroup(int f, const Toggles& t) {
  Report rep;
  const std::string in = "f=" + std::to_string(f) + " " + t.label();
  if (f < 1) {
    rep.skip("qgroup", "Q x| Z", f, in, "f must be positive");
    return rep;
  }
  const std::vector<QElem>& Q = q_elements();
  long invalid = std::count_if(Q.begin(), Q.end(), [](const QElem& x) { return !x.valid(); });
  rep.expect_eq("qgroup.order", "|Q| = 24", f, in, 24L, static_cast<long>(Q.size()) - invalid);

  GradedGroup Q0(0, t);
  const std::pair<SubgroupName, long> orders[] = {{SubgroupName::kQ8, 8}, {SubgroupName::kC4, 4},
                                                  {SubgroupName::kZ, 2},  {SubgroupName::kC3, 3},
                                                  {SubgroupName::kC6, 6}};
  for (const auto& [s, n] : orders) {
    Subgroup h = Q0.subgroup(s, false);
    rep.expect_eq(std::string("qgroup.subgroup_order.") + SubgroupLabel(s, false),
                  std::string("|") + SubgroupLabel(s, false) + "| = " + std::to_string(n), f, in, n,
                  Q0.is_subgroup(h) ? h.size() : -1);
  }

  long assoc = 0, inv = 0;
  for (const QElem& x : Q) {
    if (!(q_mul(x, q_inv(x)) == QElem{}) || !(q_mul(q_inv(x), x) == QElem{}) || !(q_mul(QElem{}, x) == x)) ++inv;
    for (const QElem& y : Q)
      for (const QElem& z : Q)
        if (!(q_mul(q_mul(x, y), z) == q_mul(x, q_mul(y, z)))) ++assoc;
  }
  rep.expect_eq("qgroup.axioms.associative", "associativity on Q (exhaustive)", f, in, 0L, assoc);
  rep.expect_eq("qgroup.axioms.inverse", "identity g(1,0,0) and two-sided inverses", f, in, 0L, inv);

  Subgroup q8 = Q0.subgroup(SubgroupName::kQ8, false), z = Q0.subgroup(SubgroupName::kZ, false);
  long not_normal = 0;
  std::vector<int> center;
  for (int x = 0; x < 24; ++x) {
    bool central = true;
    for (int y = 0; y < 24; ++y) {
      central = central && Q0.conj(y, x) == x;
      if (q8.contains(x) && !q8.contains(Q0.conj(y, x))) ++not_normal;
    }
    if (central) center.push_back(x);
  }
  rep.expect_eq("qgroup.q8_normal", "Q_8 is normal in Q", f, in, 0L, not_normal);
  rep.expect("qgroup.center", "Z is the center of Q", f, in, Ids(Q0, z.elems), Ids(Q0, center), center == z.elems);
  rep.expect_eq("qgroup.quotient_c3", "Q / Q_8 = C_3", f, in, 3L, 24L / q8.size());

  long twist_bad = 0;
  for (const QElem& x : Q)
    for (const QElem& y : Q)
      if (!(q_frob(q_mul(x, y), f) == q_mul(q_frob(x, f), q_frob(y, f)))) ++twist_bad;
  rep.expect_eq("qgroup.twist_automorphism", "r acts on Q by an automorphism", f, in, 0L, twist_bad);

  const F4 zb = zeta3_of(t), zb2 = f4_sqr(zb);
  QElem sq = q_mul(QElem{1, 1, zb}, QElem{1, 1, zb});
  rep.expect("qgroup.example.c4_square", "g(1,1,zeta3)^2 = g(1,0,1)", f, in, QElem{1, 0, 1}.str(), sq.str(),
             sq == (QElem{1, 0, 1}));
  QElem iv = q_inv(QElem{zb, 0, 0});
  rep.expect("qgroup.example.inverse", "g(zeta3,0,0)^-1 = g(zeta3^2,0,0)", f, in, QElem{zb2, 0, 0}.str(), iv.str(),
             iv == (QElem{zb2, 0, 0}));

  GradedGroup G(f, t);
  const QElem x = G.x_gen();
  if (f % 2 == 0) {
    long bad = 0;
    for (const QElem& a : Q)
      for (const QElem& b : Q)
        if (!(graded_mul({a, 1}, {b, 0}, f) == GradedQElem{q_mul(a, b), 1})) ++bad;
    rep.expect_eq("qgroup.graded.trivial_twist", "f even: (g,1)(g',0) = (gg',1)", f, in, 0L, bad);
  } else {
    GradedQElem p4 = graded_pow({x, 1}, 4, f);
    rep.expect("qgroup.graded.fourth_power", "(g(1,0,1),4) = (g(1,zeta3,zeta3),1)^4", f, in,
               GradedQElem{QElem{1, 0, 1}, 4}.str(), p4.str(), p4 == (GradedQElem{QElem{1, 0, 1}, 4}));
    GradedQElem y{x, 0};
    GradedQElem lhs = graded_mul(graded_mul(graded_inv(y, f), {x, 1}, f), y, f);
    GradedQElem rhs = graded_mul(graded_pow({x, 1}, 3, f), {QElem{}, -2}, f);
    rep.expect("qgroup.graded.conjugation",
               "(x,0)^-1 (x,1) (x,0) = (x,1)^3 (g(1,0,0),-2) for x = g(1,zeta3,zeta3)", f, in, rhs.str(),
               lhs.str(), lhs == rhs);
    Subgroup c = G.subgroup(SubgroupName::kC), q8g = G.subgroup(SubgroupName::kQ8);
    rep.expect_eq("qgroup.graded.index_c", "the index of C in Q_8 x| Z is two", f, in, 2L,
                  c.size() ? static_cast<long>(q8g.size() / c.size()) : -1L);
    CyclicExponent ce;
    bool found = express_in_cyclic({x, 1}, {QElem{1, zb2, zb}, -1}, 2, f, &ce);
    rep.expect("qgroup.graded.cyclic_span",
               "(g(1,zeta3^2,zeta3),-1) is a power of (g(1,zeta3,zeta3),1) modulo (g(1,0,0),2)", f, in,
               "exponent in [0, 8)", found ? "exponent " + std::to_string(ce.e) : "not in the span",
               found && ce.e >= 0 && ce.e < 8);
  }

  // Double cosets.
  auto partition = [&](const std::vector<DoubleCoset>& ds) {
    long total = 0;
    for (const auto& d : ds) total += d.size;
    return total;
  };
  Subgroup c6 = G.subgroup(SubgroupName::kC6);
  auto d1 = G.double_cosets(c6, c6);
  int r2 = G.id_of(QElem{1, 1, zb}, 0);
  bool reps_ok = d1.size() == 2 && !G.same_double_coset(c6, c6, G.identity(), r2);
  rep.expect("qgroup.double_cosets.c6_c6",
             "(C_6 x| Z) \\ (Q x| Z) / (C_6 x| Z) = {[(g(1,0,0),0)], [(g(1,1,zeta3),0)]}", f, in,
             "2 classes, representatives inequivalent",
             std::to_string(d1.size()) + " classes" + (reps_ok ? ", representatives inequivalent" : ""), reps_ok);
  long bad_partition = partition(d1) == G.size() ? 0 : 1;
  if (f % 2) {
    Subgroup c = G.subgroup(SubgroupName::kC), cp = G.subgroup(SubgroupName::kCprime),
             cpp = G.subgroup(SubgroupName::kCdoubleprime);
    int y = G.id_of(QElem{1, zb, zb}, 0), w = G.id_of(QElem{zb, 0, 0}, 0);
    auto d2 = G.double_cosets(cp, c);
    bool ok2 = d2.size() == 3 && !G.same_double_coset(cp, c, G.identity(), y) &&
               !G.same_double_coset(cp, c, G.identity(), w) && !G.same_double_coset(cp, c, y, w);
    rep.expect("qgroup.double_cosets.cp_c",
               "C' \\ (Q x| Z) / C = {[(g(1,0,0),0)], [(g(1,zeta3,zeta3),0)], [(g(zeta3,0,0),0)]}", f, in,
               "3 classes, representatives inequivalent",
               std::to_string(d2.size()) + " classes" + (ok2 ? ", representatives inequivalent" : ""), ok2);
    auto d3 = G.double_cosets(cp, c6);
    bool ok3 = d3.size() == 1 && d3[0].intersection == cpp.elems;
    rep.expect("qgroup.double_cosets.cp_c6", "C' \\ (Q x| Z) / (C_6 x| Z) = {[(g(1,0,0),0)]}, C' meet C_6 x| Z = C''",
               f, in, "1 class, intersection of order " + std::to_string(cpp.size()),
               std::to_string(d3.size()) + " classes" +
                   (d3.empty() ? "" : ", intersection of order " + std::to_string(d3[0].intersection.size())),
               ok3);
    if (partition(d2) != G.size() || partition(d3) != G.size()) ++bad_partition;
  }
  rep.expect_eq("qgroup.double_cosets.partition", "sum of |HxK| over representatives = |G|", f, in, 0L,
                bad_partition);
  return rep;
}

}  // namespace cond3
