#include "cattorus/report.hpp"

namespace cattorus {

CheckResult pass_result(std::string id, long long trials) {
  return CheckResult{std::move(id), trials, Status::Pass, ""};
}

CheckResult fail_result(std::string id, long long trials, std::string witness) {
  return CheckResult{std::move(id), trials, Status::Fail, std::move(witness)};
}

CheckResult skip_result(std::string id, std::string reason) {
  return CheckResult{std::move(id), 0, Status::Skip, std::move(reason)};
}

std::string render_line(const CheckResult& r) {
  std::string s = "check " + r.id + " trials=" + std::to_string(r.trials) + " status=";
  switch (r.status) {
    case Status::Pass: s += "pass"; break;
    case Status::Fail: s += "fail"; break;
    case Status::Skip: s += "skip"; break;
  }
  if (!r.witness.empty()) s += " witness=" + r.witness;
  return s;
}

bool Report::ok() const {
  for (const auto& c : checks)
    if (c.status == Status::Fail) return false;
  return true;
}

long long Report::failed() const {
  long long n = 0;
  for (const auto& c : checks)
    if (c.status == Status::Fail) ++n;
  return n;
}

std::string Report::render() const {
  std::string s;
  for (const auto& c : checks) {
    s += render_line(c);
    s += '\n';
  }
  return s;
}

}  // namespace cattorus
