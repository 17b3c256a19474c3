#pragma once

#include <string>
#include <vector>

namespace cattorus {

enum class Status { Pass, Fail, Skip };

struct CheckResult {
  std::string id;
  long long trials = 0;
  Status status = Status::Pass;
  std::string witness;  // first counterexample, or reason for a skip
};

CheckResult pass_result(std::string id, long long trials);
CheckResult fail_result(std::string id, long long trials, std::string witness);
CheckResult skip_result(std::string id, std::string reason);

/* Ordered collection of check outcomes with a stable text rendering. */
struct Report {
  std::vector<CheckResult> checks;

  void add(CheckResult r) { checks.push_back(std::move(r)); }
  void merge(const Report& r) { checks.insert(checks.end(), r.checks.begin(), r.checks.end()); }
  bool ok() const;
  long long failed() const;
  std::string render() const;
};

std::string render_line(const CheckResult& r);

}  // namespace cattorus
