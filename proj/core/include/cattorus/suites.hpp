#pragma once

// Named verification suites.  Each suite bundles the checks of one story
// into report jobs that run on the worker pool; job seeds are fixed up
// front and results keep job order, so a given (lattice, suite, seed,
// trials) always renders to the same bytes regardless of thread count.

#include <cstdint>
#include <string>
#include <vector>

#include "cattorus/lattice.hpp"
#include "cattorus/report.hpp"

namespace cattorus {

// axioms, rep, centralizer, inertia, looijenga, xi, xi-prime
const std::vector<std::string>& suite_names();
bool is_suite_name(const std::string& name);

// Runs one suite, or every suite in listed order for "all".  Throws
// std::invalid_argument on an unknown suite name.
Report run_suite(const Lattice& lat, const std::string& suite,
                 std::uint64_t seed, int trials);

}  // namespace cattorus
