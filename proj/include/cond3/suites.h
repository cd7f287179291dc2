#ifndef COND3_SUITES_H_
#define COND3_SUITES_H_

#include <string>
#include <vector>

#include "cond3/qgroup.h"
#include "cond3/report.h"

namespace cond3 {

struct SuiteConfig {
  int f_min = 1;
  int f_max = 4;
  std::vector<std::string> suites;  // empty selects every suite
  std::string toggle_sweep = "both";
  int lefschetz_max_degree = 24;
  int precision = 60;
  int jobs = 1;
  bool timings = false;  // record elapsed milliseconds; 0 otherwise
};

// Suite names in report order.
const std::vector<std::string>& all_suites();
bool is_suite(const std::string& name);

// One (suite, f, toggle) cell. Toggle-independent checks run only in the cell
// with first_toggle set.
Report run_cell(const std::string& suite, int f, const Toggles& t, bool first_toggle, const SuiteConfig& c);

// Runs every selected cell on up to c.jobs threads and merges the results
// ordered by (suite, f, check id), keeping the toggle order within equal ids.
Report run_suites(const SuiteConfig& c);

}  // namespace cond3

#endif  // COND3_SUITES_H_
