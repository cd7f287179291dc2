#include "cond3/suites.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <stdexcept>
#include <thread>

#include "cond3/chars.h"
#include "cond3/dalg.h"
#include "cond3/ellpt.h"
#include "cond3/eps.h"
#include "cond3/gf2k.h"
#include "cond3/lfield.h"

namespace cond3 {

namespace {

using Step = std::function<Report()>;

// Runs one verifier, turning resource-bound refusals into skips and any other
// exception into a failure.
void RunStep(const std::string& id, int f, const std::string& in, const Step& step, bool timings, Report* out) {
  auto start = std::chrono::steady_clock::now();
  Report r;
  try {
    r = step();
  } catch (const ResourceBound& e) {
    r = Report();
    r.skip(id, "resource bound", f, in, std::string("resource bound: ") + e.what());
  } catch (const std::exception& e) {
    r = Report();
    r.expect(id, "verifier completed", f, in, "completed", std::string("exception: ") + e.what(), false);
  }
  if (timings) {
    long ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    for (Check& c : r.mutable_checks()) c.ms = ms;
  }
  out->append(r);
}

int SuiteIndex(const std::string& id) {
  const auto& s = all_suites();
  std::string head = id.substr(0, id.find('.'));
  if (head == "gf2k") return 3;  // trace facts run with the local-field suite
  auto it = std::find(s.begin(), s.end(), head);
  return it == s.end() ? static_cast<int>(s.size()) : static_cast<int>(it - s.begin());
}

}  // namespace

const std::vector<std::string>& all_suites() {
  static const std::vector<std::string> s = {"qgroup", "chars", "ellpt", "lfield", "eps", "dalg"};
  return s;
}

bool is_suite(const std::string& name) {
  const auto& s = all_suites();
  return std::find(s.begin(), s.end(), name) != s.end();
}

Report run_cell(const std::string& suite, int f, const Toggles& t, bool first_toggle, const SuiteConfig& c) {
  Report rep;
  const std::string in = "f=" + std::to_string(f) + " " + t.label();
  const int prec = c.precision, deg = c.lefschetz_max_degree;
  std::vector<std::pair<std::string, Step>> steps;
  auto once = [&](const std::string& id, Step s) {
    if (first_toggle) steps.push_back({id, std::move(s)});
  };
  auto each = [&](const std::string& id, Step s) { steps.push_back({id, std::move(s)}); };

  if (suite == "qgroup") {
    each("qgroup", [&] { return verify_qgroup(f, t); });
  } else if (suite == "chars") {
    each("chars.tau", [&] { return verify_tau(t); });
    each("chars.tau_q", [&] { return verify_tau_q(f, t); });
    each("chars.hom_dims", [&] { return verify_hom_dimensions(f, t); });
    each("chars.quadratic_induction", [&] { return verify_quadratic_induction(f, t); });
    each("chars.tau_trace", [&] { return verify_tau_trace(f, t); });
    each("chars.det_tau", [&] { return verify_det_tau(f, t); });
    each("chars.props", [&] { return verify_character_properties(f, t); });
  } else if (suite == "ellpt") {
    once("ellpt.point_counts", [&] { return verify_point_counts(f); });
    if (f == c.f_min) once("ellpt.action", [&] { return verify_action_preserves_curve(); });
    each("ellpt.h1_character", [&] { return verify_h1_character(f, t, deg); });
    each("ellpt.props", [&] { return verify_curve_properties(f, t, deg); });
  } else if (suite == "lfield") {
    once("gf2k.trace_kernel", [&] { return verify_trace_kernel_images(f); });
    each("lfield.tower", [&] { return verify_tower(f, t, prec); });
    each("lfield.norm", [&] { return verify_norm_expansions(f, t, prec); });
    each("lfield.psi", [&] { return verify_psi(f, t, prec); });
    each("lfield.varkappa", [&] { return verify_varkappa(f, t, prec); });
    each("lfield.ramification", [&] { return verify_ramification(f, t, prec); });
    each("lfield.n2", [&] { return verify_n2_identification(f, t, prec); });
    each("lfield.det_norm", [&] { return verify_det_norm(f, t, prec); });
    each("lfield.props", [&] { return verify_lfield_properties(f, t, prec); });
  } else if (suite == "eps") {
    once("eps.gauss", [&] { return f % 2 ? verify_gauss_cubic_linear(f) : verify_gauss_cubic(f); });
    each("eps.epsilon", [&] { return verify_epsilon(f, t, prec); });
    each("eps.props", [&] { return verify_eps_properties(f, t, prec); });
  } else if (suite == "dalg") {
    once("dalg.skew", [&] { return verify_skew_ring(f); });
    each("dalg.witness", [&] { return verify_witness(f, t); });
    // The residue computations do not depend on the toggles.
    once("dalg.kappa", [&] { return verify_kappa_and_descact(f, t); });
    once("dalg.jl_descent", [&] { return verify_jl_descent(f, t); });
    each("dalg.llc_matrix", [&] { return verify_llc_matrix_identities(f, t, prec); });
  } else {
    throw std::invalid_argument("unknown suite " + suite);
  }
  for (const auto& [id, step] : steps) RunStep(id, f, in, step, c.timings, &rep);
  return rep;
}

Report run_suites(const SuiteConfig& c) {
  if (c.f_min < 1 || c.f_max < c.f_min) throw std::invalid_argument("invalid f range");
  std::vector<std::string> suites = c.suites.empty() ? all_suites() : c.suites;
  for (const auto& s : suites)
    if (!is_suite(s)) throw std::invalid_argument("unknown suite " + s);
  const std::vector<Toggles> toggles = toggle_sweep(c.toggle_sweep);

  struct Cell {
    std::string suite;
    int f;
    std::size_t toggle;
  };
  std::vector<Cell> cells;
  for (const auto& s : all_suites()) {
    if (std::find(suites.begin(), suites.end(), s) == suites.end()) continue;
    for (int f = c.f_min; f <= c.f_max; ++f)
      for (std::size_t i = 0; i < toggles.size(); ++i) cells.push_back({s, f, i});
  }
  std::vector<Report> results(cells.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < cells.size();)
      results[i] = run_cell(cells[i].suite, cells[i].f, toggles[cells[i].toggle], cells[i].toggle == 0, c);
  };
  const int jobs = std::max(1, std::min<int>(c.jobs, static_cast<int>(cells.size())));
  std::vector<std::thread> pool;
  for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  Report merged;
  for (const Report& r : results) merged.append(r);
  std::stable_sort(merged.mutable_checks().begin(), merged.mutable_checks().end(),
                   [](const Check& a, const Check& b) {
                     int sa = SuiteIndex(a.id), sb = SuiteIndex(b.id);
                     if (sa != sb) return sa < sb;
                     if (a.f != b.f) return a.f < b.f;
                     return a.id < b.id;
                   });
  return merged;
}

}  // namespace cond3
