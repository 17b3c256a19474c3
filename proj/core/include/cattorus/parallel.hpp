#pragma once

#include "cattorus/report.hpp"

#include <functional>
#include <string>
#include <vector>

namespace cattorus {

/* One self-contained randomized check.  The closure must derive any
 * randomness from data captured at construction time (seed, id), never from
 * shared mutable state, so running jobs concurrently cannot change results. */
struct CheckJob {
  std::string id;
  std::function<CheckResult()> run;
};

/* Worker count: CATTORUS_THREADS if set (clamped to >= 1), else the
 * hardware concurrency. */
unsigned thread_count();

/* Runs jobs on a small pool and returns results in job order. */
Report run_checks(const std::vector<CheckJob>& jobs);

/* Same contract for jobs that produce whole report sections; sections are
 * concatenated in job order.  A job that throws is recorded as a single
 * failure carrying the exception text. */
struct ReportJob {
  std::string id;
  std::function<Report()> run;
};

Report run_report_jobs(const std::vector<ReportJob>& jobs);

}  // namespace cattorus
