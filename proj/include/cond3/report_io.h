#ifndef COND3_REPORT_IO_H_
#define COND3_REPORT_IO_H_

#include <string>
#include <vector>

#include "cond3/report.h"
#include "cond3/suites.h"

namespace cond3 {

extern const char* const kReportVersion;

// {version, config, checks, summary}; exact values as canonical strings, so
// equal runs give byte-identical output.
std::string report_json(const SuiteConfig& c, const std::vector<std::string>& suites, const Report& r);
// Checks grouped by the first two components of their id, in report order.
std::string report_markdown(const SuiteConfig& c, const std::vector<std::string>& suites, const Report& r);

}  // namespace cond3

#endif  // COND3_REPORT_IO_H_
