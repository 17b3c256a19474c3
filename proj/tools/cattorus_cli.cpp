// Command line front end: verify suites, theta series, group data.
//
// Exit codes: 0 success, 1 suite or domain failure, 2 input error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cattorus/autos.hpp"
#include "cattorus/cattorus.hpp"
#include "cattorus/lattice.hpp"
#include "cattorus/linebundle.hpp"
#include "cattorus/suites.hpp"

namespace {

constexpr std::size_t kEnumRankBound = 4;

// Prints to stdout and, when requested, writes the same bytes to a file.
int emit(const std::string& text, const std::string& out_path) {
  std::cout << text;
  if (out_path.empty()) return 0;
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot write '" << out_path << "'\n";
    return 2;
  }
  out << text;
  return 0;
}

// Greedy generating set: grow a subgroup by closure until it is all of g.
std::vector<cattorus::MatZ> generating_set(
    const std::vector<cattorus::MatZ>& g) {
  using cattorus::MatZ;
  std::vector<MatZ> gens;
  if (g.empty()) return gens;
  std::size_t rank = g.front().rows();
  auto closure = [rank](const std::vector<MatZ>& gens) {
    std::set<std::string> seen{cattorus::show(MatZ::identity(rank))};
    std::vector<MatZ> frontier{MatZ::identity(rank)};
    while (!frontier.empty()) {
      std::vector<MatZ> next;
      for (const MatZ& a : frontier)
        for (const MatZ& s : gens) {
          MatZ b = a * s;
          if (seen.insert(cattorus::show(b)).second) next.push_back(b);
        }
      frontier = std::move(next);
    }
    return seen;
  };
  std::set<std::string> have = closure(gens);
  for (const MatZ& cand : g) {
    if (have.size() == g.size()) break;
    if (have.count(cattorus::show(cand))) continue;
    gens.push_back(cand);
    have = closure(gens);
  }
  return gens;
}

int cmd_verify(const std::string& lattice, const std::string& suite,
               std::uint64_t seed, int trials, const std::string& out_path) {
  if (!cattorus::is_suite_name(suite)) {
    std::cerr << "error: unknown suite '" << suite << "' (use all";
    for (const std::string& s : cattorus::suite_names()) std::cerr << ", " << s;
    std::cerr << ")\n";
    return 2;
  }
  cattorus::Lattice lat;
  try {
    lat = cattorus::resolve_lattice(lattice);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  cattorus::Report rep = cattorus::run_suite(lat, suite, seed, trials);
  long long skipped = 0;
  for (const auto& c : rep.checks)
    if (c.status == cattorus::Status::Skip) ++skipped;
  std::ostringstream os;
  os << "lattice " << lat.name << " rank " << lat.rank() << "\n"
     << "suite " << suite << " seed " << seed << " trials " << trials << "\n"
     << rep.render() << "summary checks=" << rep.checks.size()
     << " failed=" << rep.failed() << " skipped=" << skipped << "\n";
  int rc = emit(os.str(), out_path);
  if (rc != 0) return rc;
  return rep.ok() ? 0 : 1;
}

int cmd_theta(const std::string& lattice, long long max_half_norm,
              const std::string& out_path) {
  cattorus::Lattice lat;
  try {
    lat = cattorus::resolve_lattice(lattice);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  if (!lat.is_positive_definite()) {
    std::cerr << "error: theta series needs a positive definite form\n";
    return 1;
  }
  return emit(cattorus::theta_export(
                  cattorus::theta_series(lat, max_half_norm)),
              out_path);
}

int cmd_groups(const std::string& lattice, const std::string& out_path) {
  cattorus::Lattice lat;
  try {
    lat = cattorus::resolve_lattice(lattice);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  if (lat.rank() > kEnumRankBound) {
    std::cerr << "error: group enumeration is limited to rank "
              << kEnumRankBound << "\n";
    return 1;
  }
  std::ostringstream os;
  os << "lattice " << lat.name << " rank " << lat.rank() << "\n";

  std::vector<cattorus::MatZ> isos = cattorus::isometry_group(lat);
  os << "O(I) order " << isos.size() << "\n";
  std::vector<cattorus::MatZ> gens = generating_set(isos);
  os << "O(I) generators (" << gens.size() << ")\n";
  for (const auto& g : gens) os << "  " << cattorus::show(g) << "\n";

  cattorus::ExtraspecialData esx = cattorus::extraspecial_group(lat);
  os << "extraspecial order " << esx.elements.size() << " centre "
     << esx.centre.size() << " commutator " << esx.commutator_subgroup.size()
     << "\n";
  os << "presentation " << esx.presentation << "\n";

  if (lat.is_unimodular()) {
    std::size_t linear = std::size_t{1} << lat.rank();
    std::size_t ophi = cattorus::orthogonal_mod2(lat).size();
    os << "E' order " << ophi * linear << " inner " << linear << " outer "
       << ophi << "\n";
  }
  return emit(os.str(), out_path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"categorical torus toolkit: exact verification of the "
               "crossed-module constructions attached to an even lattice"};
  app.require_subcommand(1);

  std::string lattice;
  std::string suite = "all";
  std::string out_path;
  std::uint64_t seed = 1;
  int trials = 200;
  long long max_half_norm = 8;

  CLI::App* verify =
      app.add_subcommand("verify", "run verification suites and report");
  verify->add_option("--lattice", lattice,
                     "builtin name or file:path to a lattice spec")
      ->required();
  verify->add_option("--suite", suite, "all or one suite name");
  verify->add_option("--trials", trials, "sampled trials per check")
      ->check(CLI::PositiveNumber);
  verify->add_option("--seed", seed, "root seed");
  verify->add_option("--out", out_path, "also write the report here");

  CLI::App* theta =
      app.add_subcommand("theta", "halfnorm counts of a definite lattice");
  theta->add_option("--lattice", lattice, "builtin name or file:path")
      ->required();
  theta->add_option("--max", max_half_norm, "largest half norm")
      ->check(CLI::NonNegativeNumber);
  theta->add_option("--out", out_path, "also write the series here");

  CLI::App* groups =
      app.add_subcommand("groups", "orders and generators of the attached groups");
  groups->add_option("--lattice", lattice, "builtin name or file:path")
      ->required();
  groups->add_option("--out", out_path, "also write the data here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (verify->parsed())
      return cmd_verify(lattice, suite, seed, trials, out_path);
    if (theta->parsed()) return cmd_theta(lattice, max_half_norm, out_path);
    return cmd_groups(lattice, out_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
