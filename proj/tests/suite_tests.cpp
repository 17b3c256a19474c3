#include "doctest.h"

#include <cstdlib>
#include <stdexcept>
#include <string>

#include "cattorus/parallel.hpp"
#include "cattorus/report.hpp"
#include "cattorus/suites.hpp"

using namespace cattorus;

namespace {

struct ThreadsGuard {
  std::string saved;
  bool had = false;
  ThreadsGuard() {
    if (const char* v = std::getenv("CATTORUS_THREADS")) {
      saved = v;
      had = true;
    }
  }
  ~ThreadsGuard() {
    if (had)
      setenv("CATTORUS_THREADS", saved.c_str(), 1);
    else
      unsetenv("CATTORUS_THREADS");
  }
};

}  // namespace

TEST_CASE("render lines spell out id trials status and witness") {
  Report rep;
  rep.add(pass_result("a", 5));
  rep.add(fail_result("b", 2, "broke"));
  rep.add(skip_result("c", "too big"));
  CHECK(render_line(rep.checks[0]) == "check a trials=5 status=pass");
  CHECK(render_line(rep.checks[1]) == "check b trials=2 status=fail witness=broke");
  CHECK(render_line(rep.checks[2]) == "check c trials=0 status=skip witness=too big");
  CHECK(rep.failed() == 1);
  CHECK_FALSE(rep.ok());
  CHECK(rep.render() ==
        "check a trials=5 status=pass\n"
        "check b trials=2 status=fail witness=broke\n"
        "check c trials=0 status=skip witness=too big\n");
}

TEST_CASE("suite names are fixed and unknown names are rejected") {
  const auto& names = suite_names();
  REQUIRE(names.size() == 7);
  CHECK(names[0] == "axioms");
  CHECK(names[1] == "rep");
  CHECK(names[2] == "centralizer");
  CHECK(names[3] == "inertia");
  CHECK(names[4] == "looijenga");
  CHECK(names[5] == "xi");
  CHECK(names[6] == "xi-prime");
  for (const std::string& n : names) CHECK(is_suite_name(n));
  CHECK(is_suite_name("all"));
  CHECK_FALSE(is_suite_name("bogus"));
  CHECK_THROWS_AS(run_suite(builtin_lattice("A1"), "bogus", 1, 10),
                  std::invalid_argument);
}

TEST_CASE("a throwing report job becomes one failure in job order") {
  std::vector<ReportJob> jobs;
  jobs.push_back(ReportJob{"first", [] {
                             Report r;
                             r.add(pass_result("first.inner", 1));
                             return r;
                           }});
  jobs.push_back(ReportJob{"second", []() -> Report {
                             throw std::runtime_error("deliberate");
                           }});
  jobs.push_back(ReportJob{"third", [] {
                             Report r;
                             r.add(pass_result("third.inner", 1));
                             return r;
                           }});
  Report rep = run_report_jobs(jobs);
  REQUIRE(rep.checks.size() == 3);
  CHECK(rep.checks[0].id == "first.inner");
  CHECK(rep.checks[1].id == "second");
  CHECK(rep.checks[1].status == Status::Fail);
  CHECK(rep.checks[1].witness == "exception: deliberate");
  CHECK(rep.checks[2].id == "third.inner");
}

TEST_CASE("suite output is byte identical across worker counts") {
  ThreadsGuard guard;
  Lattice a1 = builtin_lattice("A1");

  setenv("CATTORUS_THREADS", "1", 1);
  CHECK(thread_count() == 1);
  std::string serial = run_suite(a1, "all", 7, 50).render();

  setenv("CATTORUS_THREADS", "3", 1);
  CHECK(thread_count() == 3);
  std::string pooled = run_suite(a1, "all", 7, 50).render();

  CHECK(serial == pooled);
  CHECK_FALSE(serial.empty());

  Report rep = run_suite(a1, "rep", 7, 40);
  REQUIRE(rep.checks.size() >= 2);
  CHECK(rep.ok());
}
