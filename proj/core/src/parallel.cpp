#include "cattorus/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <thread>

namespace cattorus {

unsigned thread_count() {
  if (const char* env = std::getenv("CATTORUS_THREADS")) {
    long n = std::strtol(env, nullptr, 10);
    if (n >= 1) return static_cast<unsigned>(n);
    return 1;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

Report run_checks(const std::vector<CheckJob>& jobs) {
  std::vector<CheckResult> results(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= jobs.size()) return;
      results[i] = jobs[i].run();
    }
  };
  unsigned n = thread_count();
  if (n <= 1 || jobs.size() <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < n && t < jobs.size(); ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  Report rep;
  for (auto& r : results) rep.add(std::move(r));
  return rep;
}

Report run_report_jobs(const std::vector<ReportJob>& jobs) {
  std::vector<Report> results(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= jobs.size()) return;
      try {
        results[i] = jobs[i].run();
      } catch (const std::exception& e) {
        Report r;
        r.add(fail_result(jobs[i].id, 0, std::string("exception: ") + e.what()));
        results[i] = std::move(r);
      }
    }
  };
  unsigned n = thread_count();
  if (n <= 1 || jobs.size() <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < n && t < jobs.size(); ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  Report rep;
  for (auto& r : results) rep.merge(r);
  return rep;
}

}  // namespace cattorus
