#ifndef COND3_REPORT_H_
#define COND3_REPORT_H_

#include <exception>
#include <string>
#include <vector>

#include "cond3/cycnum.h"

namespace cond3 {

enum class Verdict { kPass, kFail, kSkip };

const char* VerdictName(Verdict v);

struct Check {
  std::string id;
  std::string anchor;
  int f = 0;
  std::string inputs;
  std::string expected;
  std::string computed;
  Verdict verdict = Verdict::kPass;
  std::string reason;
  long ms = 0;
};

class Report {
 public:
  void add(Check c) { checks_.push_back(std::move(c)); }
  // Records a pass/fail check.
  bool expect(const std::string& id, const std::string& anchor, int f, const std::string& inputs,
              const std::string& expected, const std::string& computed, bool ok);
  bool expect_eq(const std::string& id, const std::string& anchor, int f, const std::string& inputs,
                 const CycNum& expected, const CycNum& computed);
  bool expect_eq(const std::string& id, const std::string& anchor, int f, const std::string& inputs,
                 long expected, long computed);
  void skip(const std::string& id, const std::string& anchor, int f, const std::string& inputs,
            const std::string& reason);
  void append(const Report& other);
  // Prefixes every check id (e.g. with the toggle label).
  void prefix_ids(const std::string& p);

  const std::vector<Check>& checks() const { return checks_; }
  std::vector<Check>& mutable_checks() { return checks_; }
  int count(Verdict v) const;
  bool ok() const { return count(Verdict::kFail) == 0; }
  // First failing check, or nullptr.
  const Check* first_failure() const;

 private:
  std::vector<Check> checks_;
};

// Error raised when a computation cannot be carried out within a configured bound.
struct ResourceBound : std::exception {
  explicit ResourceBound(std::string m) : msg(std::move(m)) {}
  const char* what() const noexcept override { return msg.c_str(); }
  std::string msg;
};

}  // namespace cond3

#endif  // COND3_REPORT_H_
