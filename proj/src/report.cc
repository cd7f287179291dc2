#include "cond3/report.h"

namespace cond3 {

const char* VerdictName(Verdict v) {
  switch (v) {
    case Verdict::kPass:
      return "pass";
    case Verdict::kFail:
      return "fail";
    case Verdict::kSkip:
      return "skip";
  }
  return "?";
}

bool Report::expect(const std::string& id, const std::string& anchor, int f,
                    const std::string& inputs, const std::string& expected,
                    const std::string& computed, bool ok) {
  Check c;
  c.id = id;
  c.anchor = anchor;
  c.f = f;
  c.inputs = inputs;
  c.expected = expected;
  c.computed = computed;
  c.verdict = ok ? Verdict::kPass : Verdict::kFail;
  checks_.push_back(std::move(c));
  return ok;
}

bool Report::expect_eq(const std::string& id, const std::string& anchor, int f,
                       const std::string& inputs, const CycNum& expected, const CycNum& computed) {
  return expect(id, anchor, f, inputs, expected.str(), computed.str(), expected == computed);
}

bool Report::expect_eq(const std::string& id, const std::string& anchor, int f,
                       const std::string& inputs, long expected, long computed) {
  return expect(id, anchor, f, inputs, std::to_string(expected), std::to_string(computed),
                expected == computed);
}

void Report::skip(const std::string& id, const std::string& anchor, int f,
                  const std::string& inputs, const std::string& reason) {
  Check c;
  c.id = id;
  c.anchor = anchor;
  c.f = f;
  c.inputs = inputs;
  c.verdict = Verdict::kSkip;
  c.reason = reason;
  checks_.push_back(std::move(c));
}

void Report::append(const Report& other) {
  checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
}

void Report::prefix_ids(const std::string& p) {
  for (auto& c : checks_) c.id = p + c.id;
}

int Report::count(Verdict v) const {
  int n = 0;
  for (const auto& c : checks_) n += c.verdict == v;
  return n;
}

const Check* Report::first_failure() const {
  for (const auto& c : checks_)
    if (c.verdict == Verdict::kFail) return &c;
  return nullptr;
}

}  // namespace cond3
