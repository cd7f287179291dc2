#include "cond3/chars.h"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>

namespace cond3 {

namespace {

std::string FInput(int f, const Toggles& t) { return "f=" + std::to_string(f) + " " + t.label(); }

CycNum Q(int f) { return pow2(f); }

CycNum SqrtM2(const GradedGroup& g) { return sqrt_minus_two(g.toggles().sqrt_minus_two); }

// det at an arbitrary (g, n): det of the representative times det(1,N)^carry.
CycNum DetAt(const GChar& chi, const std::vector<CycNum>& det, const GradedQElem& x) {
  long c;
  int id = chi.group().id_of(x, &c);
  return det[id] * (chi.lambda() * chi.lambda()).pow(c);
}

}  // namespace

GChar::GChar(const GradedGroup& g, const Subgroup& h) : g_(&g), h_(h), vals_(g.size()) {}

CycNum GChar::at(int id, int carry) const {
  if (!h_.contains(id)) throw std::invalid_argument("character evaluated outside its domain");
  if (carry == 0) return vals_[id];
  return vals_[id] * lambda_.pow(carry);
}

CycNum GChar::at(const GradedQElem& x) const {
  long c;
  int id = g_->id_of(x, &c);
  return at(id, static_cast<int>(c));
}

void GChar::check_compatible(const GChar& o) const {
  if (g_ != o.g_ || h_.elems != o.h_.elems) throw std::invalid_argument("characters on different domains");
  if (lambda_ != o.lambda_) throw std::invalid_argument("characters with different central scalars");
}

GChar GChar::operator+(const GChar& o) const {
  check_compatible(o);
  GChar r = *this;
  for (int id : h_.elems) r.vals_[id] += o.vals_[id];
  return r;
}

GChar GChar::operator-(const GChar& o) const {
  check_compatible(o);
  GChar r = *this;
  for (int id : h_.elems) r.vals_[id] -= o.vals_[id];
  return r;
}

GChar GChar::operator*(const GChar& o) const {
  if (g_ != o.g_ || h_.elems != o.h_.elems) throw std::invalid_argument("characters on different domains");
  GChar r = *this;
  for (int id : h_.elems) r.vals_[id] *= o.vals_[id];
  r.lambda_ = lambda_ * o.lambda_;
  return r;
}

GChar GChar::scaled(const CycNum& c) const {
  GChar r = *this;
  for (int id : h_.elems) r.vals_[id] *= c;
  return r;
}

bool GChar::operator==(const GChar& o) const {
  if (g_ != o.g_ || h_.elems != o.h_.elems || lambda_ != o.lambda_) return false;
  for (int id : h_.elems)
    if (vals_[id] != o.vals_[id]) return false;
  return true;
}

bool GChar::is_class_function() const {
  for (int x : h_.elems)
    for (int y : h_.elems)
      if (vals_[g_->conj(y, x)] != vals_[x]) return false;
  return true;
}

GChar trivial_char(const GradedGroup& g, const Subgroup& h) {
  GChar r(g, h);
  for (int id : h.elems) r.set_value(id, 1);
  return r;
}

GChar induce(const GChar& chi, const Subgroup& target) {
  const GradedGroup& g = chi.group();
  const Subgroup& h = chi.domain();
  for (int id : h.elems)
    if (!target.contains(id)) throw std::invalid_argument("induce: " + h.name + " not inside " + target.name);
  GChar r(g, target);
  r.set_lambda(chi.lambda());
  std::vector<int> mult(g.size());
  for (int x : target.elems) {
    std::fill(mult.begin(), mult.end(), 0);
    for (int y : target.elems) {
      // Conjugation preserves the grade, so representatives need no carry.
      int c = g.conj(y, x);
      if (h.contains(c)) ++mult[c];
    }
    CycNum sum;
    for (int c : h.elems)
      if (mult[c]) sum += chi.value(c) * CycNum(mult[c]);
    r.set_value(x, sum * CycNum::Rational(1, h.size()));
  }
  return r;
}

GChar restrict(const GChar& chi, const Subgroup& h) {
  GChar r(chi.group(), h);
  r.set_lambda(chi.lambda());
  for (int id : h.elems) {
    if (!chi.domain().contains(id))
      throw std::invalid_argument("restrict: " + h.name + " not inside " + chi.domain().name);
    r.set_value(id, chi.value(id));
  }
  return r;
}

GChar conjugate(const GChar& chi, int y, const Subgroup& domain) {
  const GradedGroup& g = chi.group();
  GChar r(g, domain);
  r.set_lambda(chi.lambda());
  int yi = g.inv(y);
  for (int x : domain.elems) r.set_value(x, chi.value(g.conj(yi, x)));
  return r;
}

GChar from_generators(const GradedGroup& g, const Subgroup& h,
                      const std::vector<std::pair<GradedQElem, CycNum>>& gens, const CycNum& lambda) {
  GChar r(g, h);
  r.set_lambda(lambda);
  CycNum lambda_inv = lambda.inverse();
  std::vector<char> set(g.size(), 0);
  std::vector<std::pair<int, CycNum>> gid;
  for (const auto& [x, v] : gens) {
    long c;
    int id = g.id_of(x, &c);
    if (!h.contains(id)) throw std::invalid_argument("generator outside the subgroup");
    gid.push_back({id, v * lambda_inv.pow(c)});
  }
  std::deque<int> queue{g.identity()};
  set[g.identity()] = 1;
  r.set_value(g.identity(), 1);
  while (!queue.empty()) {
    int y = queue.front();
    queue.pop_front();
    for (const auto& [id, v] : gid) {
      int c;
      int z = g.mul(y, id, &c);
      CycNum val = r.value(y) * v * lambda_inv.pow(c);
      if (set[z]) {
        if (r.value(z) != val) throw std::logic_error("from_generators: inconsistent values on " + h.name);
      } else {
        set[z] = 1;
        r.set_value(z, val);
        queue.push_back(z);
      }
    }
  }
  for (int id : h.elems)
    if (!set[id]) throw std::logic_error("from_generators: generators do not span " + h.name);
  return r;
}

GChar phi0(const GradedGroup& g, const Subgroup& h) {
  GChar r(g, h);
  const int f = g.f();
  CycNum s = SqrtM2(g);
  CycNum step = s.pow(f) * pow2(-f);  // value at (1, 1)
  for (int id : h.elems) r.set_value(id, step.pow(g.elem(id).n));
  r.set_lambda(step.pow(g.period()));
  if (f == 0) r.set_lambda(1);
  return r;
}

GChar normalize(const GChar& chi) {
  if (!chi.group().graded()) return chi;
  GChar p = phi0(chi.group(), chi.domain());
  GChar r(chi.group(), chi.domain());
  for (int id : chi.domain().elems) r.set_value(id, chi.value(id) / p.value(id));
  r.set_lambda(chi.lambda() / p.lambda());
  return r;
}

CycNum inner_product(const GChar& a, const GChar& b) {
  if (&a.group() != &b.group() || a.domain().elems != b.domain().elems)
    throw std::invalid_argument("inner_product: different domains");
  GChar na = normalize(a), nb = normalize(b);
  if (na.lambda() != CycNum(1) || nb.lambda() != CycNum(1))
    throw std::domain_error("inner_product: characters are not unitary after normalization");
  CycNum sum;
  for (int id : a.domain().elems) sum += na.value(id) * nb.value(id).conj();
  return sum * CycNum::Rational(1, a.domain().size());
}

std::vector<CycNum> determinant(const GChar& chi) {
  const GradedGroup& g = chi.group();
  std::vector<CycNum> out(g.size());
  for (int x : chi.domain().elems) {
    int c;
    int x2 = g.mul(x, x, &c);
    out[x] = (chi.value(x) * chi.value(x) - chi.at(x2, c)) * CycNum::Rational(1, 2);
  }
  return out;
}

GChar build_phi(const GradedGroup& g) {
  if (g.graded() && g.f() % 2) throw std::invalid_argument("build_phi: graded version needs f even");
  Subgroup c4 = g.subgroup(SubgroupName::kC4, g.graded());
  F4 g0 = gamma0_of(g.toggles());
  std::vector<std::pair<GradedQElem, CycNum>> gens{{{QElem{1, 1, g0}, 0}, imag_unit()}};
  CycNum lambda(1);
  if (g.graded()) {
    lambda = SqrtM2(g).pow(g.f()) * pow2(-g.f());
    gens.push_back({{QElem{}, 1}, lambda});
  }
  return from_generators(g, c4, gens, lambda);
}

GChar build_tau(const GradedGroup& q) {
  if (q.graded()) throw std::invalid_argument("build_tau: needs the ungraded group");
  Subgroup full = q.subgroup(SubgroupName::kQ, false);
  Subgroup c6 = q.subgroup(SubgroupName::kC6, false);
  GChar phi = build_phi(q);
  // phi|Z x 1_{C3}: nontrivial on g(1,0,1), trivial on C3.
  GChar psi = from_generators(q, c6, {{{QElem{1, 0, 1}, 0}, CycNum(-1)}, {{QElem{2, 0, 0}, 0}, CycNum(1)}}, 1);
  return induce(phi, full) - induce(psi, full);
}

GChar build_phi1(const GradedGroup& g) {
  if (g.f() % 2 == 0) throw std::invalid_argument("build_phi1: f must be odd");
  const int f = g.f();
  CycNum q = Q(f);
  CycNum eta = eta_pair(f).eta;
  CycNum at2 = CycNum(-1) / q;
  return from_generators(g, g.subgroup(SubgroupName::kC),
                         {{{g.x_gen(), 1}, eta / q}, {{QElem{}, 2}, at2}}, at2.pow(g.period() / 2));
}

GChar build_phi2(const GradedGroup& g) {
  if (g.f() % 2 == 0) throw std::invalid_argument("build_phi2: f must be odd");
  const int f = g.f();
  CycNum at1 = SqrtM2(g).pow(f) / Q(f);
  return from_generators(g, g.subgroup(SubgroupName::kC6),
                         {{{QElem{1, 0, 1}, 0}, CycNum(-1)}, {{QElem{2, 0, 0}, 0}, CycNum(1)}, {{QElem{}, 1}, at1}},
                         at1.pow(g.period()));
}

GChar build_tau_q(const GradedGroup& g) {
  const int f = g.f();
  if (f < 1) throw std::invalid_argument("build_tau_q: f must be >= 1");
  Subgroup full = g.subgroup(SubgroupName::kFull);
  if (f % 2 == 0) {
    GradedGroup q(0, g.toggles());
    GChar tau = build_tau(q);
    GChar r(g, full);
    for (int id : full.elems) r.set_value(id, tau.value(id));
    r.set_lambda(CycNum(-2).pow(-f / 2));
    return r;
  }
  return induce(build_phi1(g), full) - induce(build_phi2(g), full);
}

bool mackey_holds(const GChar& chi, const Subgroup& k) {
  const GradedGroup& g = chi.group();
  Subgroup full = g.subgroup(SubgroupName::kFull, g.graded());
  GChar lhs = restrict(induce(chi, full), k);
  GChar rhs(g, k);
  rhs.set_lambda(chi.lambda());
  for (const DoubleCoset& dc : g.double_cosets(k, chi.domain())) {
    Subgroup inter = g.from_list("K meet xHx^-1", dc.intersection);
    GChar cx = conjugate(chi, dc.rep, inter);
    rhs = rhs + induce(cx, k);
  }
  return lhs == rhs;
}

bool frobenius_reciprocity_holds(const GChar& chi, const GChar& psi) {
  GChar ind = induce(chi, psi.domain());
  return inner_product(ind, psi) == inner_product(chi, restrict(psi, chi.domain()));
}

Report verify_tau(const Toggles& t) {
  Report rep;
  GradedGroup q(0, t);
  const std::string in = "ungraded " + t.label();
  GChar tau = build_tau(q);
  GChar phi = build_phi(q);
  rep.expect_eq("chars.tau.degree", "degree of tau", 0, in, 2, tau.degree());
  rep.expect_eq("chars.tau.norm", "<tau, tau> = 1", 0, in, 1, inner_product(tau, tau));
  rep.expect("chars.tau.class_function", "tau is a class function on Q", 0, in, "true",
             tau.is_class_function() ? "true" : "false", tau.is_class_function());
  for (F4 a : {F4{2}, F4{3}})
    rep.expect_eq("chars.tau.alpha_trace." + std::to_string(a), "tr tau(g(alpha,0,0)) = -1 for alpha != 1", 0,
                  in + " alpha=" + QElem{a, 0, 0}.str(), -1, tau.value(q.id_of(QElem{a, 0, 0}, 0)));
  for (int z : q.subgroup(SubgroupName::kZ, false).elems)
    rep.expect_eq("chars.tau.center." + q.elem(z).g.str(), "tau|Z = 2 phi|Z", 0, in, phi.value(z) * CycNum(2),
                  tau.value(z));
  std::vector<CycNum> det = determinant(tau);
  int bad = 0;
  for (int id = 0; id < q.size(); ++id) bad += det[id] != CycNum(1);
  rep.expect_eq("chars.tau.det_trivial", "det tau = 1", 0, in, 0, bad);
  Subgroup full = q.subgroup(SubgroupName::kQ, false);
  rep.expect_eq("chars.tau.ind_c4_degree", "Ind_{C4}^Q phi has degree 6", 0, in, 6, induce(phi, full).degree());
  return rep;
}

Report verify_tau_q(int f, const Toggles& t) {
  Report rep;
  const std::string in = FInput(f, t);
  GradedGroup g(f, t);
  GChar tq = build_tau_q(g);
  GradedGroup q(0, t);
  GChar tau = build_tau(q);
  rep.expect_eq("chars.tau_q.degree", "degree of tau_q", f, in, 2, tq.degree());
  rep.expect_eq("chars.tau_q.norm", "<tau_q, tau_q> = 1", f, in, 1, inner_product(tq, tq));
  rep.expect("chars.tau_q.class_function", "tau_q is a class function", f, in, "true",
             tq.is_class_function() ? "true" : "false", tq.is_class_function());
  // Restriction to Q x 2Z: tau on Q, (1,2) acting by (-2)^-f.
  int bad = 0;
  CycNum scalar = CycNum(-2).pow(-f);
  for (const QElem& x : q_elements())
    for (long n : {0L, 2L, 4L, -2L})
      bad += tq.at(GradedQElem{x, n}) != tau.value(q.id_of(x, 0)) * scalar.pow(n / 2);
  rep.expect_eq("chars.tau_q.restriction_q2z", "tau_q|Q x 2Z = tau'_q", f, in, 0, bad);
  rep.expect_eq("chars.tau_q.at_1_2", "tau_q((1,2)) = 2(-2)^-f", f, in, scalar * CycNum(2),
                tq.at(GradedQElem{QElem{}, 2}));
  if (f % 2 == 0) {
    GChar phi1 = build_phi(g);
    Subgroup q8 = g.subgroup(SubgroupName::kQ8);
    rep.expect("chars.tau_q.even_q8_induced", "tau_q|Q8 x Z = Ind_{C4 x Z}^{Q8 x Z} phi1", f, in, "equal",
               restrict(tq, q8) == induce(phi1, q8) ? "equal" : "different",
               restrict(tq, q8) == induce(phi1, q8));
  }
  return rep;
}

Report verify_hom_dimensions(int f, const Toggles& t) {
  Report rep;
  const std::string in = FInput(f, t);
  if (f % 2 == 0) {
    rep.skip("chars.hom_dims", "Ind phi2 irreducible and Psi surjective", f, in, "requires f odd");
    return rep;
  }
  GradedGroup g(f, t);
  Subgroup full = g.subgroup(SubgroupName::kFull);
  Subgroup c6 = g.subgroup(SubgroupName::kC6);
  Subgroup zz = g.subgroup(SubgroupName::kZ);
  Subgroup c = g.subgroup(SubgroupName::kC);
  GChar phi1 = build_phi1(g), phi2 = build_phi2(g);
  GChar ind1 = induce(phi1, full), ind2 = induce(phi2, full);
  rep.expect_eq("chars.hom_dims.end_ind_phi2", "dim End(Ind_{C6 x| Z} phi2) = 1", f, in, 1, inner_product(ind2, ind2));
  rep.expect_eq("chars.hom_dims.hom_ind1_ind2", "dim Hom(Ind_C phi1, Ind_{C6 x| Z} phi2) = 1", f, in, 1,
                inner_product(ind1, ind2));
  rep.expect_eq("chars.hom_dims.ind_phi1_degree", "Ind_C phi1 has degree 6", f, in, 6, ind1.degree());
  rep.expect_eq("chars.hom_dims.ind_phi1_norm", "Ind_C phi1 = 2-dim + 4-dim irreducibles (norm 2)", f, in, 2,
                inner_product(ind1, ind1));
  rep.expect_eq("chars.hom_dims.split_degrees", "Ind_C phi1 splits as 2 + 4", f, in, 4, ind2.degree());

  F4 z = zeta3_of(t);
  int y = g.id_of(QElem{1, 1, z}, 0);
  auto dc = g.double_cosets(c6, c6);
  bool reps_ok = dc.size() == 2 && !g.same_double_coset(c6, c6, g.identity(), y);
  rep.expect("chars.hom_dims.double_cosets_c6", "(C6 x| Z)\\(Q x| Z)/(C6 x| Z) = {[1], [g(1,1,z3)]}", f, in,
             "2 classes, listed representatives inequivalent", std::to_string(dc.size()) + " classes", reps_ok);
  std::vector<int> inter;
  for (int b : c6.elems)
    if (c6.contains(g.conj(y, b))) inter.push_back(g.conj(y, b));
  std::sort(inter.begin(), inter.end());
  rep.expect("chars.hom_dims.intersection_z", "(C6 x| Z) meet y(C6 x| Z)y^-1 = Z x| Z", f, in,
             std::to_string(zz.size()) + " elements equal to Z x| Z", std::to_string(inter.size()) + " elements",
             inter == zz.elems);
  GChar phi2p = conjugate(phi2, y, zz);
  GChar mackey = phi2 + induce(phi2p, c6);
  rep.expect("chars.hom_dims.mackey_c6", "Res Ind phi2 = phi2 + Ind_{Z x| Z}^{C6 x| Z} phi2'", f, in, "equal",
             restrict(ind2, c6) == mackey ? "equal" : "different", restrict(ind2, c6) == mackey);
  rep.expect_eq("chars.hom_dims.hom_phi2_phi2p", "Hom_{Z x| Z}(phi2|, phi2') = 0", f, in, 0,
                inner_product(restrict(phi2, zz), phi2p));
  auto dc2 = g.double_cosets(c, c6);
  rep.expect_eq("chars.hom_dims.double_cosets_c_c6", "C\\(Q x| Z)/(C6 x| Z) = {[1]}", f, in, 1,
                static_cast<long>(dc2.size()));
  return rep;
}

Report verify_quadratic_induction(int f, const Toggles& t) {
  Report rep;
  const std::string in = FInput(f, t);
  if (f % 2 == 0) {
    rep.skip("chars.quadratic_induction", "tau_q|Q8 x| Z = Ind_C phi1", f, in, "requires f odd");
    return rep;
  }
  GradedGroup g(f, t);
  Subgroup full = g.subgroup(SubgroupName::kFull);
  Subgroup q8 = g.subgroup(SubgroupName::kQ8);
  GChar phi1 = build_phi1(g), phi2 = build_phi2(g);
  GChar tq = build_tau_q(g);
  GChar lhs = restrict(tq, q8);
  GChar rhs = induce(phi1, q8);
  int bad = 0;
  for (int id : q8.elems) bad += lhs.value(id) != rhs.value(id);
  rep.expect_eq("chars.quadratic_induction.character_equality", "tau_q|Q8 x| Z = Ind_C^{Q8 x| Z} phi1", f, in, 0, bad);
  rep.expect_eq("chars.quadratic_induction.degree", "both sides have degree 2", f, in, 2, rhs.degree());
  rep.expect_eq("chars.quadratic_induction.irreducible", "Ind_C^{Q8 x| Z} phi1 irreducible", f, in, 1,
                inner_product(rhs, rhs));
  rep.expect_eq("chars.quadratic_induction.dim_hom_ind1", "dim Hom(Ind_C^{Q8} phi1, Res Ind_C phi1) = 2", f, in, 2,
                inner_product(rhs, restrict(induce(phi1, full), q8)));
  rep.expect_eq("chars.quadratic_induction.dim_hom_ind2", "dim Hom(Ind_C^{Q8} phi1, Res Ind phi2) = 1", f, in, 1,
                inner_product(rhs, restrict(induce(phi2, full), q8)));
  return rep;
}

Report verify_tau_trace(int f, const Toggles& t) {
  Report rep;
  const std::string in = FInput(f, t);
  if (f % 2 == 0) {
    rep.skip("chars.tau_trace", "trace of tau_q at (g(1,z3,z3),1)", f, in, "requires f odd");
    return rep;
  }
  GradedGroup g(f, t);
  Subgroup full = g.subgroup(SubgroupName::kFull);
  Subgroup c = g.subgroup(SubgroupName::kC);
  Subgroup c6 = g.subgroup(SubgroupName::kC6);
  Subgroup cp = g.subgroup(SubgroupName::kCprime);
  Subgroup cpp = g.subgroup(SubgroupName::kCdoubleprime);
  GChar phi1 = build_phi1(g), phi2 = build_phi2(g);
  GChar ind1 = induce(phi1, full), ind2 = induce(phi2, full);
  GChar tq = ind1 - ind2;
  const CycNum q = Q(f);
  const CycNum eta = eta_pair(f).eta;
  const CycNum target = -CycNum(-2).pow((f + 1) / 2) / q;
  const GradedQElem x1{g.x_gen(), 1};

  rep.expect_eq("chars.tau_trace.trace_tau_q", "tr((g(1,z3,z3),1); tau_q) = -(-2)^((f+1)/2) q^-1", f, in, target,
                tq.at(x1));
  rep.expect_eq("chars.tau_trace.trace_ind_phi1_eta", "tr((g(1,z3,z3),1); Ind_C phi1) = eta/q - eta^3/q^2", f, in,
                eta / q - eta.pow(3) / (q * q), ind1.at(x1));
  rep.expect_eq("chars.tau_trace.trace_ind_phi1", "tr((g(1,z3,z3),1); Ind_C phi1) = -(-2)^((f+1)/2)/q", f, in,
                target, ind1.at(x1));
  rep.expect_eq("chars.tau_trace.trace_ind_phi2", "tr((g(1,z3,z3),1); Ind phi2) = 0", f, in, 0, ind2.at(x1));

  // Double cosets C'\G/C and C'\G/(C6 x| Z).
  F4 z = zeta3_of(t);
  int r1 = g.identity(), r2 = g.id_of(QElem{1, z, z}, 0), r3 = g.id_of(QElem{z, 0, 0}, 0);
  auto dc = g.double_cosets(cp, c);
  bool distinct = !g.same_double_coset(cp, c, r1, r2) && !g.same_double_coset(cp, c, r1, r3) &&
                  !g.same_double_coset(cp, c, r2, r3);
  rep.expect("chars.tau_trace.double_cosets_cp_c",
             "C'\\(Q x| Z)/C = {[1], [g(1,z3,z3)], [g(z3,0,0)]}", f, in, "3 classes, listed representatives distinct",
             std::to_string(dc.size()) + " classes" + (distinct ? "" : ", representatives collide"),
             dc.size() == 3 && distinct);
  std::vector<int> inter;
  for (int b : c.elems)
    if (cp.contains(g.conj(r3, b))) inter.push_back(g.conj(r3, b));
  std::sort(inter.begin(), inter.end());
  rep.expect("chars.tau_trace.intersection_cpp", "C' meet g(z3,0,0) C g(z3,0,0)^-1 = C''", f, in, "C''",
             std::to_string(inter.size()) + " elements", inter == cpp.elems);
  auto dc6 = g.double_cosets(cp, c6);
  rep.expect("chars.tau_trace.double_cosets_cp_c6", "C'\\(Q x| Z)/(C6 x| Z) = {[1]}, C' meet (C6 x| Z) = C''", f, in,
             "1 class with intersection C''", std::to_string(dc6.size()) + " classes",
             dc6.size() == 1 && dc6[0].intersection == cpp.elems);

  // The conjugation identity used for the trace.
  GradedQElem y{g.x_gen(), 0};
  GradedQElem lhs = graded_mul(graded_mul(graded_inv(y, f), x1, f), y, f);
  GradedQElem rhs = graded_mul(graded_pow(x1, 3, f), GradedQElem{QElem{}, -2}, f);
  rep.expect("chars.tau_trace.conjugation_identity", "y^-1 (g(1,z3,z3),1) y = (g(1,z3,z3),1)^3 (1,-2)", f, in,
             rhs.str(), lhs.str(), lhs == rhs);
  rep.expect("chars.tau_trace.fourth_power", "(g(1,0,1),4) = (g(1,z3,z3),1)^4", f, in, "(g(1,0,1),4)",
             graded_pow(x1, 4, f).str(), graded_pow(x1, 4, f) == (GradedQElem{QElem{1, 0, 1}, 4}));

  // Restriction decompositions on C'.
  int yid = g.id_of(g.x_gen(), 0);
  GChar phi1p = conjugate(phi1, yid, cp);
  GChar ri1 = restrict(phi1, cp) + phi1p + induce(restrict(phi1, cpp), cp);
  rep.expect("chars.tau_trace.res_ind_phi1", "Res_{C'} Ind_C phi1 = phi1|C' + phi1' + Ind_{C''}^{C'} phi1|C''", f, in,
             "equal", restrict(ind1, cp) == ri1 ? "equal" : "different", restrict(ind1, cp) == ri1);
  GChar ri2 = induce(restrict(phi2, cpp), cp);
  rep.expect("chars.tau_trace.res_ind_phi2", "Res_{C'} Ind phi2 = Ind_{C''}^{C'} phi2|C''", f, in, "equal",
             restrict(ind2, cp) == ri2 ? "equal" : "different", restrict(ind2, cp) == ri2);

  // Uniqueness: the (-1)^n twist changes the trace at the test element.
  CycNum twisted = tq.at(x1) * CycNum(-1);
  rep.expect("chars.tau_trace.uniqueness", "the (-1)^n twist of tau_q has a different trace", f, in,
             "different from " + target.str(), twisted.str(), twisted != target);
  return rep;
}

Report verify_det_tau(int f, const Toggles& t) {
  Report rep;
  const std::string in = FInput(f, t);
  GradedGroup g(f, t);
  GChar tq = build_tau_q(g);
  std::vector<CycNum> det = determinant(tq);
  int bad = 0;
  std::string witness;
  for (int id = 0; id < g.size(); ++id) {
    CycNum expected = pow2(-static_cast<long>(f) * g.elem(id).n);
    if (det[id] != expected) {
      if (!bad++) witness = g.elem(id).str() + " -> " + det[id].str();
    }
  }
  rep.expect("chars.det_tau.all_elements", "det((g,n); tau_q) = q^-n", f, in,
             "0 mismatches over " + std::to_string(g.size()) + " elements",
             std::to_string(bad) + " mismatches" + (bad ? ", first " + witness : ""), bad == 0);
  rep.expect_eq("chars.det_tau.central", "det of the central element (1,N) = q^-N", f, in,
                pow2(-static_cast<long>(f) * g.period()), tq.lambda() * tq.lambda());
  rep.expect_eq("chars.det_tau.test_element", "det((g(1,z3,z3),1); tau_q) = q^-1", f, in, pow2(-f),
                DetAt(tq, det, GradedQElem{g.x_gen(), 1}));
  // Multiplicativity on a sample of pairs.
  int mbad = 0;
  for (int a = 0; a < g.size(); a += 5)
    for (int b = 0; b < g.size(); b += 7) {
      int c;
      int p = g.mul(a, b, &c);
      CycNum lhs = det[p] * (tq.lambda() * tq.lambda()).pow(c);
      if (lhs != det[a] * det[b]) ++mbad;
    }
  rep.expect_eq("chars.det_tau.multiplicative", "det is multiplicative", f, in, 0, mbad);
  return rep;
}

Report verify_character_properties(int f, const Toggles& t) {
  Report rep;
  const std::string in = FInput(f, t);
  GradedGroup g(f, t);
  std::vector<std::pair<GChar, std::vector<SubgroupName>>> cases;
  if (f % 2) {
    cases.push_back({build_phi1(g), {SubgroupName::kC6, SubgroupName::kCprime, SubgroupName::kQ8, SubgroupName::kC}});
    cases.push_back({build_phi2(g), {SubgroupName::kC6, SubgroupName::kCprime, SubgroupName::kQ8, SubgroupName::kC}});
  } else {
    cases.push_back({build_phi(g), {SubgroupName::kQ8, SubgroupName::kC6, SubgroupName::kC4}});
  }
  GChar tq = build_tau_q(g);
  Subgroup full = g.subgroup(SubgroupName::kFull);
  int mackey_bad = 0, recip_bad = 0, degree_bad = 0, total = 0;
  for (auto& [chi, ks] : cases) {
    GChar ind = induce(chi, full);
    if (ind.degree() != chi.degree() * CycNum(g.size() / chi.domain().size())) ++degree_bad;
    if (!ind.is_class_function()) ++degree_bad;
    for (SubgroupName kn : ks) {
      Subgroup k = g.subgroup(kn);
      ++total;
      if (!mackey_holds(chi, k)) ++mackey_bad;
    }
    if (!frobenius_reciprocity_holds(chi, tq)) ++recip_bad;
    if (!frobenius_reciprocity_holds(chi, induce(chi, full))) ++recip_bad;
  }
  rep.expect_eq("chars.props.mackey", "Mackey formula Res_K Ind_H = sum over K\\G/H", f, in, 0, mackey_bad);
  rep.expect_eq("chars.props.reciprocity", "Frobenius reciprocity", f, in, 0, recip_bad);
  rep.expect_eq("chars.props.induced_degree", "Ind degree = index x degree, Ind is a class function", f, in, 0,
                degree_bad);
  return rep;
}

}  // namespace cond3
