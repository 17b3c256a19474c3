#include "cattorus/suites.hpp"

#include <algorithm>
#include <stdexcept>

#include "cattorus/actor.hpp"
#include "cattorus/autos.hpp"
#include "cattorus/basicrep.hpp"
#include "cattorus/cattorus.hpp"
#include "cattorus/inertia.hpp"
#include "cattorus/linebundle.hpp"
#include "cattorus/parallel.hpp"
#include "cattorus/rng.hpp"
#include "cattorus/xmod.hpp"

namespace cattorus {

namespace {

constexpr std::size_t kEnumRankBound = 4;

using Maker = Report (*)(const Lattice&, std::uint64_t, int);

ReportJob lattice_job(const std::string& id, Maker fn, const Lattice& lat,
                      std::uint64_t seed, int trials) {
  std::uint64_t s = derive_seed(seed, id);
  return ReportJob{id, [fn, lat, s, trials] { return fn(lat, s, trials); }};
}

// The isometry-backed crossed modules enumerate O(I) up front, which is
// only sane at small rank; report the same skip their dedicated suites use.
ReportJob guarded_axiom_job(const std::string& id, XMod (*make)(const Lattice&),
                            const Lattice& lat, std::uint64_t seed,
                            int trials) {
  std::uint64_t s = derive_seed(seed, id);
  return ReportJob{id, [make, lat, s, trials, id] {
                     if (lat.rank() > kEnumRankBound) {
                       Report r;
                       r.add(skip_result(id, "rank above enumeration bound"));
                       return r;
                     }
                     return xmod_axioms(make(lat), s, trials);
                   }};
}

std::vector<ReportJob> axioms_jobs(const Lattice& lat, std::uint64_t seed,
                                   int trials) {
  std::vector<ReportJob> jobs;
  auto axiom_job = [&](const std::string& id, XMod (*make)(const Lattice&)) {
    std::uint64_t s = derive_seed(seed, id);
    jobs.push_back(
        ReportJob{id, [make, lat, s, trials] {
                    return xmod_axioms(make(lat), s, trials);
                  }});
  };
  std::string l = lat.name + ".";
  axiom_job(l + "theta", [](const Lattice& la) { return make_theta(la); });
  axiom_job(l + "theta_prime",
            [](const Lattice& la) { return make_theta_prime(la); });
  axiom_job(l + "excov", make_extraspecial);
  axiom_job(l + "centre", [](const Lattice& la) { return centre_theta(la); });
  axiom_job(l + "rep_centraliser", make_rep_centraliser);
  jobs.push_back(guarded_axiom_job(l + "xi", make_xi, lat, seed, trials));
  jobs.push_back(
      guarded_axiom_job(l + "xi_prime", make_xi_prime, lat, seed, trials));
  {
    std::string id = l + "coherence";
    std::uint64_t s = derive_seed(seed, id);
    jobs.push_back(ReportJob{id, [lat, s, trials] {
                               return monoidal_coherence(make_theta(lat), s,
                                                         trials);
                             }});
  }
  return jobs;
}

std::vector<ReportJob> rep_jobs(const Lattice& lat, std::uint64_t seed,
                                int trials) {
  std::vector<ReportJob> jobs;
  for (auto [k, n] : {std::pair<int, int>{1, 1}, {2, 3}}) {
    std::string id =
        lat.name + ".rep_k" + std::to_string(k) + "n" + std::to_string(n);
    std::uint64_t s = derive_seed(seed, id);
    int kk = k, nn = n;
    jobs.push_back(ReportJob{id, [lat, s, trials, kk, nn] {
                               return verify_rep(
                                   lat, make_rep(lat, Int(kk), Int(nn)), s,
                                   trials);
                             }});
  }
  return jobs;
}

std::vector<ReportJob> centralizer_jobs(const Lattice& lat, std::uint64_t seed,
                                        int trials) {
  return {
      lattice_job(lat.name + ".centre_structure", centre_structure_check, lat,
                  seed, trials),
      lattice_job(lat.name + ".centraliser_of_id",
                  centraliser_of_identity_check, lat, seed, trials),
      lattice_job(lat.name + ".centraliser_theorem",
                  verify_centralizer_theorem, lat, seed, trials),
  };
}

std::vector<ReportJob> inertia_jobs(const Lattice& lat, std::uint64_t seed,
                                    int trials) {
  return {
      lattice_job(lat.name + ".cochain_lemma", cochain_lemma_check, lat, seed,
                  trials),
      lattice_job(lat.name + ".full_model", full_model_check, lat, seed,
                  trials),
      lattice_job(lat.name + ".strictification", strictification_check, lat,
                  seed, trials),
      lattice_job(lat.name + ".presentations", presentations_isomorphism, lat,
                  seed, trials),
      lattice_job(lat.name + ".t_mod_H", t_mod_H_equivalence, lat, seed,
                  trials),
      lattice_job(lat.name + ".trivialization", trivialization_check, lat,
                  seed, trials),
  };
}

std::vector<ReportJob> looijenga_jobs(const Lattice& lat, std::uint64_t seed,
                                      int trials) {
  std::vector<ReportJob> jobs = {
      lattice_job(lat.name + ".gerbe", gerbe_check, lat, seed, trials),
      lattice_job(lat.name + ".holonomy", holonomy_check, lat, seed, trials),
      lattice_job(lat.name + ".looijenga", looijenga_check, lat, seed,
                  trials),
      lattice_job(lat.name + ".class_function", class_function_check, lat,
                  seed, trials),
  };
  {
    std::string id = lat.name + ".theta_series";
    std::uint64_t s = derive_seed(seed, id);
    jobs.push_back(ReportJob{
        id, [lat, s, trials] { return theta_check(lat, 4, s, trials); }});
  }
  return jobs;
}

std::vector<ReportJob> xi_jobs(const Lattice& lat, std::uint64_t seed,
                               int trials) {
  return {
      lattice_job(lat.name + ".xi_equivalence", xi_equivalence_check, lat,
                  seed, trials),
      lattice_job(lat.name + ".ad_sequence", ad_sequence_check, lat, seed,
                  trials),
  };
}

std::vector<ReportJob> xi_prime_jobs(const Lattice& lat, std::uint64_t seed,
                                     int trials) {
  return {
      lattice_job(lat.name + ".xi_prime_equivalence",
                  xi_prime_equivalence_check, lat, seed, trials),
      lattice_job(lat.name + ".eprime", unimodular_eprime_check, lat, seed,
                  trials),
  };
}

std::vector<ReportJob> suite_jobs(const Lattice& lat, const std::string& suite,
                                  std::uint64_t seed, int trials) {
  if (suite == "axioms") return axioms_jobs(lat, seed, trials);
  if (suite == "rep") return rep_jobs(lat, seed, trials);
  if (suite == "centralizer") return centralizer_jobs(lat, seed, trials);
  if (suite == "inertia") return inertia_jobs(lat, seed, trials);
  if (suite == "looijenga") return looijenga_jobs(lat, seed, trials);
  if (suite == "xi") return xi_jobs(lat, seed, trials);
  if (suite == "xi-prime") return xi_prime_jobs(lat, seed, trials);
  throw std::invalid_argument("unknown suite '" + suite + "'");
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "axioms", "rep", "centralizer", "inertia", "looijenga", "xi",
      "xi-prime"};
  return names;
}

bool is_suite_name(const std::string& name) {
  if (name == "all") return true;
  const auto& names = suite_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

Report run_suite(const Lattice& lat, const std::string& suite,
                 std::uint64_t seed, int trials) {
  std::vector<ReportJob> jobs;
  if (suite == "all") {
    for (const std::string& s : suite_names()) {
      std::vector<ReportJob> part = suite_jobs(lat, s, seed, trials);
      jobs.insert(jobs.end(), std::make_move_iterator(part.begin()),
                  std::make_move_iterator(part.end()));
    }
  } else {
    jobs = suite_jobs(lat, suite, seed, trials);
  }
  return run_report_jobs(jobs);
}

}  // namespace cattorus
