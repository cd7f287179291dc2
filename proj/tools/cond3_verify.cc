// Batch verification harness: runs the selected suites over a range of f and
// toggle combinations and writes a JSON or Markdown report.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "cond3/report_io.h"
#include "cond3/suites.h"

int main(int argc, char** argv) {
  CLI::App app{"Run the verification suites and write a report"};
  cond3::SuiteConfig cfg;
  std::string suites_arg = "all", format = "json", out;
  app.add_option("--f-min", cfg.f_min, "Smallest f")->check(CLI::PositiveNumber);
  app.add_option("--f-max", cfg.f_max, "Largest f")->check(CLI::PositiveNumber);
  app.add_option("--suites", suites_arg, "Comma-separated suites or 'all'");
  app.add_option("--toggle-sweep", cfg.toggle_sweep, "Toggle choices")
      ->check(CLI::IsMember({"first", "second", "both"}));
  app.add_option("--report", format, "Report format")->check(CLI::IsMember({"json", "md"}));
  app.add_option("--out", out, "Output path (stdout when omitted)");
  app.add_option("--lefschetz-max-degree", cfg.lefschetz_max_degree, "Largest scan field degree")
      ->check(CLI::Range(1, 64));
  app.add_option("--precision", cfg.precision, "Series precision")->check(CLI::Range(8, 1000));
  app.add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::Range(1, 256));
  app.add_flag("--timings", cfg.timings, "Record elapsed milliseconds per check");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }
  if (cfg.f_max < cfg.f_min) {
    std::cerr << "--f-max must be at least --f-min\n";
    return 2;
  }
  std::vector<std::string> suites;
  if (suites_arg == "all") {
    suites = cond3::all_suites();
  } else {
    std::stringstream ss(suites_arg);
    for (std::string s; std::getline(ss, s, ',');) {
      if (!cond3::is_suite(s)) {
        std::cerr << "unknown suite: " << s << "\n";
        return 2;
      }
      suites.push_back(s);
    }
  }
  cfg.suites = suites;
  // Echo the selection in canonical suite order.
  std::vector<std::string> ordered;
  for (const auto& s : cond3::all_suites())
    if (std::find(suites.begin(), suites.end(), s) != suites.end()) ordered.push_back(s);

  cond3::Report r = cond3::run_suites(cfg);
  std::string text = format == "json" ? cond3::report_json(cfg, ordered, r) : cond3::report_markdown(cfg, ordered, r);
  if (out.empty()) {
    std::cout << text;
  } else {
    std::ofstream os(out, std::ios::binary);
    if (!os) {
      std::cerr << "cannot write " << out << "\n";
      return 2;
    }
    os << text;
  }
  std::cerr << "pass " << r.count(cond3::Verdict::kPass) << " fail " << r.count(cond3::Verdict::kFail) << " skip "
            << r.count(cond3::Verdict::kSkip) << "\n";
  return r.ok() ? 0 : 1;
}
