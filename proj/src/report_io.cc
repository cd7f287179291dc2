#include "cond3/report_io.h"

#include <map>
#include <sstream>

#include "json.hpp"

namespace cond3 {

const char* const kReportVersion = "1.0.0";

namespace {

std::string VerdictString(const Check& c) {
  if (c.verdict == Verdict::kSkip) return "skip(" + c.reason + ")";
  return VerdictName(c.verdict);
}

nlohmann::ordered_json ConfigJson(const SuiteConfig& c, const std::vector<std::string>& suites) {
  nlohmann::ordered_json j;
  j["f_min"] = c.f_min;
  j["f_max"] = c.f_max;
  j["suites"] = suites;
  j["toggle_sweep"] = c.toggle_sweep;
  j["lefschetz_max_degree"] = c.lefschetz_max_degree;
  j["precision"] = c.precision;
  return j;
}

std::string Escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    if (ch == '|') out += "\\|";
    else if (ch == '\n') out += ' ';
    else out += ch;
  }
  return out;
}

}  // namespace

std::string report_json(const SuiteConfig& c, const std::vector<std::string>& suites,
                       const Report& r) {
  nlohmann::ordered_json j;
  j["version"] = kReportVersion;
  j["config"] = ConfigJson(c, suites);
  j["checks"] = nlohmann::ordered_json::array();
  for (const Check& ch : r.checks()) {
    nlohmann::ordered_json e;
    e["id"] = ch.id;
    e["anchor"] = ch.anchor;
    e["f"] = ch.f;
    e["inputs"] = ch.inputs;
    e["expected"] = ch.expected;
    e["computed"] = ch.computed;
    e["verdict"] = VerdictString(ch);
    e["ms"] = ch.ms;
    j["checks"].push_back(std::move(e));
  }
  j["summary"] = {{"pass", r.count(Verdict::kPass)},
                  {"fail", r.count(Verdict::kFail)},
                  {"skip", r.count(Verdict::kSkip)}};
  return j.dump(2) + "\n";
}

std::string report_markdown(const SuiteConfig& c, const std::vector<std::string>& suites,
                           const Report& r) {
  std::ostringstream os;
  os << "# Verification report\n\n";
  os << "version " << kReportVersion << "; f in [" << c.f_min << ", " << c.f_max << "]; toggles " << c.toggle_sweep
     << "; precision " << c.precision << "; scan degree " << c.lefschetz_max_degree << "; suites";
  for (const auto& s : suites) os << " " << s;
  os << "\n\n";
  os << "pass " << r.count(Verdict::kPass) << ", fail " << r.count(Verdict::kFail) << ", skip "
     << r.count(Verdict::kSkip) << "\n";
  std::vector<std::string> order;
  std::map<std::string, std::vector<const Check*>> groups;
  for (const Check& ch : r.checks()) {
    std::size_t dot = ch.id.find('.');
    std::size_t dot2 = dot == std::string::npos ? dot : ch.id.find('.', dot + 1);
    std::string key = ch.id.substr(0, dot2);
    if (!groups.count(key)) order.push_back(key);
    groups[key].push_back(&ch);
  }
  for (const auto& key : order) {
    os << "\n## " << key << "\n\n| id | f | inputs | statement | expected | computed | verdict | ms |\n"
       << "|---|---|---|---|---|---|---|---|\n";
    for (const Check* ch : groups[key])
      os << "| " << Escape(ch->id) << " | " << ch->f << " | " << Escape(ch->inputs) << " | " << Escape(ch->anchor)
         << " | " << Escape(ch->expected) << " | " << Escape(ch->computed) << " | " << Escape(VerdictString(*ch))
         << " | " << ch->ms << " |\n";
  }
  return os.str();
}

}  // namespace cond3
