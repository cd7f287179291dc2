// Acceptance run: one pass/fail line per criterion. Exit status 1 when any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "cond3/ellpt.h"
#include "cond3/eps.h"
#include "cond3/report_io.h"
#include "cond3/suites.h"

namespace cond3 {
namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

SuiteConfig Config(const std::string& suite, int f_min, int f_max) {
  SuiteConfig c;
  c.suites = {suite};
  c.f_min = f_min;
  c.f_max = f_max;
  c.toggle_sweep = "both";
  return c;
}

bool StartsWith(const std::string& s, const std::string& p) { return s.compare(0, p.size(), p) == 0; }

// No failures, and every listed id prefix has at least one passing check.
void Require(const Report& r, const std::vector<std::string>& prefixes, Outcome* out) {
  if (const Check* c = r.first_failure())
    out->fail(std::to_string(r.count(Verdict::kFail)) + " failing checks, first " + c->id + " (f=" +
              std::to_string(c->f) + ")");
  for (const auto& p : prefixes) {
    bool seen = false;
    for (const Check& c : r.checks()) seen = seen || (c.verdict == Verdict::kPass && StartsWith(c.id, p));
    if (!seen) out->fail("no passing check " + p);
  }
}

long CountPass(const Report& r, const std::string& prefix, int f) {
  long n = 0;
  for (const Check& c : r.checks()) n += c.f == f && c.verdict == Verdict::kPass && StartsWith(c.id, prefix);
  return n;
}

Outcome GroupsAndCharacters() {
  Outcome o;
  Report r = run_suites([] {
    SuiteConfig c = Config("qgroup", 1, 6);
    c.suites = {"qgroup", "chars"};
    return c;
  }());
  Require(r,
          {"qgroup.order", "qgroup.double_cosets.c6_c6", "qgroup.double_cosets.cp_c", "chars.tau.norm",
           "chars.tau.det_trivial", "chars.tau.alpha_trace", "chars.hom_dims.hom_ind1_ind2",
           "chars.hom_dims.end_ind_phi2", "chars.hom_dims.double_cosets_c6",
           "chars.quadratic_induction.character_equality", "chars.quadratic_induction.dim_hom_ind1",
           "chars.quadratic_induction.dim_hom_ind2", "chars.tau_trace.trace_tau_q", "chars.tau_trace.trace_ind_phi1",
           "chars.tau_trace.trace_ind_phi2", "chars.det_tau.all_elements"},
          &o);
  o.detail = o.ok ? std::to_string(r.count(Verdict::kPass)) + " checks pass, f = 1..6, all toggles" : o.detail;
  return o;
}

Outcome Elliptic() {
  Outcome o;
  if (count_points(Curve::kE, 1) != 3) o.fail("|E(F_2)| != 3");
  if (count_points(Curve::kE, 2) != 9) o.fail("|E(F_4)| != 9");
  Report point_counts;
  for (int f = 1; f <= 12; ++f) point_counts.append(verify_point_counts(f));
  Require(point_counts, {"ellpt.point_counts.E", "ellpt.point_counts.Eprime"}, &o);
  if (point_counts.count(Verdict::kPass) != 24)
    o.fail("point_counts: " + std::to_string(point_counts.count(Verdict::kPass)) + " of 24");
  Report r = run_suites(Config("ellpt", 1, 2));
  Require(r,
          {"ellpt.h1_character.fixed_points_x", "ellpt.h1_character.fr2", "ellpt.h1_character.fr4",
           "ellpt.h1_character.n0"},
          &o);
  for (int f = 1; f <= 2; ++f) {
    long n = CountPass(r, "ellpt.h1_character.n1.", f) + CountPass(r, "ellpt.h1_character.n2.", f);
    if (n != 48 * 8) o.fail("f=" + std::to_string(f) + ": " + std::to_string(n) + " of 48 x 8 trace comparisons");
  }
  if (o.ok) o.detail = "48 trace comparisons per f and toggle, point-count formulas f <= 12";
  return o;
}

Outcome LocalFields() {
  Outcome o;
  SuiteConfig c = Config("lfield", 1, 4);
  Report r60 = run_suites(c);
  c.precision = 84;
  Report r84 = run_suites(c);
  const std::vector<std::string> need = {
      "lfield.det_norm.det",        "lfield.det_norm.trace",       "lfield.tower.norm_delta2",
      "lfield.tower.norm_theta2", "lfield.tower.norm_theta2_over_delta4", "lfield.normexp.first",
      "lfield.normexp.second",   "lfield.n2.identification", "lfield.varkappa.formula",
      "lfield.varkappa.at_w",    "lfield.ramification.lower", "lfield.ramification.upper"};
  Require(r60, need, &o);
  Require(r84, need, &o);
  std::map<std::string, std::string> a;
  for (const Check& ch : r60.checks()) a[ch.id + "|" + ch.inputs] += ch.computed + ";";
  std::map<std::string, std::string> b;
  for (const Check& ch : r84.checks()) b[ch.id + "|" + ch.inputs] += ch.computed + ";";
  long differ = 0;
  for (const auto& [k, v] : a)
    if (b.count(k) && b[k] != v) ++differ;
  if (differ) o.fail(std::to_string(differ) + " computed values change between precision 60 and 84");
  if (o.ok) o.detail = std::to_string(r60.count(Verdict::kPass)) + " checks pass at precision 60 and 84";
  return o;
}

Outcome Epsilon() {
  Outcome o;
  Report g;
  for (int f = 2; f <= 12; f += 2) g.append(verify_gauss_cubic(f));
  for (int f = 1; f <= 11; f += 2) g.append(verify_gauss_cubic_linear(f));
  Require(g, {"eps.gauss_cubic.value", "eps.gauss_cubic.affine", "eps.gauss_linear.value", "eps.gauss_linear.affine"},
          &o);
  for (int f = 1; f <= 12; ++f)
    if (CountPass(g, f % 2 ? "eps.gauss_linear.affine" : "eps.gauss_cubic.affine", f) == 0)
      o.fail("affine identity missing at f=" + std::to_string(f));
  if (CountPass(g, "eps.gauss_linear.value", 1) == 0 || CountPass(g, "eps.gauss_linear.value", 9) == 0)
    o.fail("linear Gauss sum at f in {1, 9}");
  Report r = run_suites(Config("eps", 1, 4));
  Require(r, {"eps.sum.twisted_unit_sum", "eps.sum.extensions", "eps.assemble.final"}, &o);
  for (int f = 1; f <= 4; ++f)
    if (CountPass(r, "eps.sum.twisted_unit_sum", f) == 0) o.fail("twisted unit sum missing at f=" + std::to_string(f));
  if (o.ok) o.detail = "Gauss sums f <= 12, level-one sum and assembly f = 1..4";
  return o;
}

Outcome DivisionAlgebra() {
  Outcome o;
  Report r = run_suites(Config("dalg", 1, 7));
  Require(r,
          {"dalg.witness.nm", "dalg.witness.s8", "dalg.witness.delta4", "dalg.witness.theta2", "dalg.witness.commute",
           "dalg.witness.zeta3", "dalg.witness.conj_delta4", "dalg.witness.conj_theta2", "dalg.witness.fact_a0",
           "dalg.witness.fact_b0", "dalg.witness.fact_b4", "dalg.jl_descent.identity", "dalg.llc_matrix.conjugation",
           "dalg.llc_matrix.psi_cubed", "dalg.kappa.kappa2_additive", "dalg.kappa.fd_additive"},
          &o);
  for (int f : {1, 3, 5, 7})
    if (CountPass(r, "dalg.witness.", f) == 0) o.fail("witness missing at f=" + std::to_string(f));
  if (o.ok) o.detail = "witness f in {1,3,5,7}, jl_descent f <= 3, llc_matrix f <= 6";
  return o;
}

// Property checks from a full sweep.
Outcome Properties(const Report& full) {
  Outcome o;
  Report props;
  for (const Check& c : full.checks())
    if (c.id.find(".props.") != std::string::npos || StartsWith(c.id, "qgroup.axioms") ||
        StartsWith(c.id, "qgroup.double_cosets.partition") || StartsWith(c.id, "dalg.skew.") ||
        StartsWith(c.id, "gf2k."))
      props.add(c);
  Require(props,
          {"chars.props.reciprocity", "chars.props.mackey", "ellpt.props.hasse", "lfield.props.norm_multiplicative",
           "lfield.props.trace_linear", "lfield.props.precision_stable", "dalg.skew.associative",
           "eps.props.group_law"},
          &o);
  if (o.ok) o.detail = std::to_string(props.count(Verdict::kPass)) + " property checks pass, f = 1..4";
  return o;
}

void Print(int n, const std::string& name, const Outcome& o, double secs, bool* all) {
  std::printf("criterion %d: %s  %s (%s) [%.1f s]\n", n, o.ok ? "PASS" : "FAIL", name.c_str(), o.detail.c_str(),
              secs);
  std::fflush(stdout);
  *all = *all && o.ok;
}

}  // namespace
}  // namespace cond3

int main() {
  using namespace cond3;
  bool all = true;
  auto timed = [](const std::function<Outcome()>& fn, double* secs) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o = fn();
    *secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return o;
  };
  double s;
  Outcome o;
  o = timed(GroupsAndCharacters, &s);
  Print(1, "group and character suite", o, s, &all);
  o = timed(Elliptic, &s);
  Print(2, "elliptic suite", o, s, &all);
  o = timed(LocalFields, &s);
  Print(3, "local-field suite", o, s, &all);
  o = timed(Epsilon, &s);
  Print(4, "epsilon suite", o, s, &all);
  o = timed(DivisionAlgebra, &s);
  Print(5, "division-algebra suite", o, s, &all);

  SuiteConfig full;
  full.f_min = 1;
  full.f_max = 4;
  full.toggle_sweep = "both";
  std::vector<std::string> suites = all_suites();
  Report first, second;
  o = timed([&] {
    first = run_suites(full);
    return Properties(first);
  }, &s);
  Print(6, "property suites", o, s, &all);
  o = timed([&] {
    Outcome d;
    second = run_suites(full);
    std::string a = report_json(full, suites, first), b = report_json(full, suites, second);
    if (a != b) d.fail("reports differ");
    d.detail = d.ok ? "two full runs give identical " + std::to_string(a.size()) + "-byte JSON reports" : d.detail;
    return d;
  }, &s);
  Print(7, "determinism", o, s, &all);
  return all ? 0 : 1;
}
