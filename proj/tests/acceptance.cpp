// Acceptance gate.  Runs the eleven release criteria end to end and prints
// one verdict line each; exits nonzero if any of them fails.  Trial counts
// and time budgets here are contractual, do not shrink them to save time.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "cattorus/actor.hpp"
#include "cattorus/autos.hpp"
#include "cattorus/basicrep.hpp"
#include "cattorus/cattorus.hpp"
#include "cattorus/inertia.hpp"
#include "cattorus/lattice.hpp"
#include "cattorus/linebundle.hpp"
#include "cattorus/parallel.hpp"
#include "cattorus/rng.hpp"
#include "cattorus/suites.hpp"
#include "cattorus/xmod.hpp"

#include "oracles.hpp"

using namespace cattorus;

namespace {

constexpr std::uint64_t kSeed = 1729;

using Clock = std::chrono::steady_clock;

double elapsed(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string secs(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1fs", s);
  return buf;
}

const std::vector<std::string>& gate_lattices() {
  static const std::vector<std::string> names = {"A1", "A2", "A1xA1", "U",
                                                 "D4"};
  return names;
}

bool id_passes(const Report& rep, const std::string& id, std::string& note) {
  for (const auto& c : rep.checks)
    if (c.id == id) {
      if (c.status == Status::Pass) return true;
      note += "; " + render_line(c);
      return false;
    }
  note += "; missing check " + id;
  return false;
}

bool all_ok(const Report& rep, std::string& note) {
  if (rep.ok()) return true;
  for (const auto& c : rep.checks)
    if (c.status == Status::Fail) {
      note += "; " + render_line(c);
      return false;
    }
  return false;
}

PLPath random_pl_loop(Rng& rng, std::size_t r) {
  VecQ v0 = rng.vec_q(r, 4, 12);
  VecQ v1 = rng.vec_q(r, 4, 12);
  VecQ v2 = rng.vec_q(r, 4, 12);
  VecQ vend = v0 + to_q(rng.vec_z(r, 3));
  return pl_path({{Rational(0), v0},
                  {Rational(1, 3), v1},
                  {Rational(3, 4), v2},
                  {Rational(1), vend}});
}

struct Gate {
  int failures = 0;

  void run(int num, std::string note, std::function<bool(std::string&)> fn) {
    bool ok = false;
    try {
      ok = fn(note);
    } catch (const std::exception& e) {
      note += std::string("; exception: ") + e.what();
      ok = false;
    }
    if (!ok) ++failures;
    std::printf("criterion %2d %s  %s\n", num, ok ? "pass" : "FAIL",
                note.c_str());
    std::fflush(stdout);
  }
};

bool criterion_axioms(std::string& note) {
  auto t0 = Clock::now();
  struct Named {
    const char* tag;
    std::function<XMod(const Lattice&)> make;
  };
  const std::vector<Named> modules = {
      {"theta", [](const Lattice& l) { return make_theta(l); }},
      {"theta_prime", [](const Lattice& l) { return make_theta_prime(l); }},
      {"extraspecial", make_extraspecial},
      {"centre", [](const Lattice& l) { return centre_theta(l); }},
      {"rep_centraliser", make_rep_centraliser},
      {"xi", make_xi},
      {"xi_prime", make_xi_prime},
  };
  bool ok = true;
  for (const std::string& name : gate_lattices()) {
    Lattice lat = builtin_lattice(name);
    for (const Named& m : modules) {
      std::string tag = name + "." + m.tag;
      Report rep = xmod_axioms(m.make(lat), derive_seed(kSeed, tag), 1000);
      if (!all_ok(rep, note)) {
        note += " [" + tag + "]";
        ok = false;
      }
    }
  }
  double dt = elapsed(t0);
  note += " (" + secs(dt) + ")";
  if (dt >= 60.0) {
    note += "; over the 60s budget";
    ok = false;
  }
  return ok;
}

bool criterion_coherence(std::string& note) {
  bool ok = true;
  for (const std::string& name : gate_lattices()) {
    Lattice lat = builtin_lattice(name);
    Report rep =
        monoidal_coherence(make_theta(lat), derive_seed(kSeed, name), 1000);
    if (!all_ok(rep, note)) {
      note += " [" + name + "]";
      ok = false;
    }
  }
  return ok;
}

bool criterion_centre(std::string& note) {
  bool ok = true;
  for (const std::string& name : gate_lattices()) {
    Lattice lat = builtin_lattice(name);
    XMod zc = centre_theta(lat);
    std::size_t r = lat.rank();
    for (std::size_t k = 0; k < r; ++k) {
      VecZ m = VecZ::unit(r, k);
      Elt gen = Elt::of<FibElt>(FibElt{m, Scalar::one()});
      Elt want = Elt::of<CentreElt>(CentreElt{to_q(m), -lat.i_sharp(m)});
      if (!zc.base.eq(zc.bnd(gen), want)) {
        note += "; generator " + std::to_string(k) + " of " + name +
                " lands on " + zc.base.show(zc.bnd(gen));
        ok = false;
      }
    }
    Elt scalar = Elt::of<FibElt>(
        FibElt{VecZ::zero(r), phase_scalar(Rational(3, 7))});
    if (!zc.base.eq(zc.bnd(scalar), zc.base.id)) {
      note += "; scalar label has nonzero boundary on " + name;
      ok = false;
    }
    if (!all_ok(centre_structure_check(lat, derive_seed(kSeed, name), 200),
                note))
      ok = false;
  }
  return ok;
}

bool criterion_centraliser(std::string& note) {
  const std::vector<std::string> parts = {
      "membership",   "pi1_constants", "pi1_invariance",
      "pi0_distinct", "pi0_onto",      "mutation_iota"};
  bool ok = true;
  for (const std::string& name : {std::string("A1"), std::string("A1xA1"),
                                  std::string("U")}) {
    Lattice lat = builtin_lattice(name);
    Report rep =
        verify_centralizer_theorem(lat, derive_seed(kSeed, name), 300);
    if (!all_ok(rep, note)) ok = false;
    for (const std::string& part : parts)
      if (!id_passes(rep, "cthm." + name + "." + part, note)) ok = false;

    /* the weight mutation swaps the two transposes of the pairing; when J
     * is symmetric they coincide, the corrupted map equals the true one,
     * and no witness can exist, so the documented skip counts as vacuous */
    std::string wid = "cthm." + name + ".mutation_weight";
    bool found = false;
    for (const auto& c : rep.checks)
      if (c.id == wid) {
        found = true;
        if (c.status == Status::Fail ||
            (c.status == Status::Skip &&
             !(lat.j == lat.j.transposed()))) {
          note += "; " + render_line(c);
          ok = false;
        }
      }
    if (!found) {
      note += "; missing check " + wid;
      ok = false;
    }
  }
  return ok;
}

bool criterion_flagship(std::string& note) {
  Lattice u = builtin_lattice("U");
  Report wk = weak_check(theta_prime_comparison(u),
                         derive_seed(kSeed, "flagship"), 2000, "flagship");
  bool ok = all_ok(wk, note);
  Report xp = xi_prime_equivalence_check(u, derive_seed(kSeed, "xip"), 300);
  if (!all_ok(xp, note)) ok = false;
  if (!id_passes(xp, "xip.U.delta_hessian", note)) ok = false;
  if (!id_passes(xp, "xip.U.kappa_mutation", note)) ok = false;
  return ok;
}

bool criterion_inertia(std::string& note) {
  const std::vector<std::string> parts = {"class_i_lifts", "class_ii_lifts",
                                          "iso_well_defined",
                                          "iso_functorial"};
  bool ok = true;
  for (const std::string& name : {std::string("A1"), std::string("A2")}) {
    Lattice lat = builtin_lattice(name);
    Report pres =
        presentations_isomorphism(lat, derive_seed(kSeed, name), 500);
    if (!all_ok(pres, note)) ok = false;
    for (const std::string& part : parts)
      if (!id_passes(pres, "inertia." + name + "." + part, note)) ok = false;
    if (!all_ok(t_mod_H_equivalence(lat, derive_seed(kSeed, name + ".h"), 500),
                note))
      ok = false;
  }
  return ok;
}

bool criterion_theta(std::string& note) {
  struct Pin {
    const char* name;
    long long max;
    std::vector<long long> counts;
  };
  const std::vector<Pin> pins = {
      {"A1", 4, {1, 2, 0, 0, 2}},
      {"A2", 3, {1, 6, 0, 6}},
      {"D4", 2, {1, 24, 24}},
      {"E8", 3, {1, 240, 2160, 6720}},
  };
  bool ok = true;
  for (const Pin& pin : pins) {
    auto t0 = Clock::now();
    std::vector<Int> brute = oracle::euclidean_theta(pin.name, pin.max);
    ThetaSeries engine = theta_series(builtin_lattice(pin.name), pin.max);
    double dt = elapsed(t0);
    if (brute.size() != pin.counts.size() ||
        engine.counts.size() != pin.counts.size()) {
      note += std::string("; ") + pin.name + " series length off";
      ok = false;
      continue;
    }
    for (std::size_t k = 0; k < pin.counts.size(); ++k)
      if (brute[k] != Int(pin.counts[k]) || engine.counts[k] != brute[k]) {
        note += std::string("; ") + pin.name + " count at " +
                std::to_string(k) + ": oracle " + show(brute[k]) +
                " engine " + show(engine.counts[k]);
        ok = false;
        break;
      }
    if (std::string(pin.name) == "E8") {
      note += " (E8 " + secs(dt) + ")";
      if (dt >= 10.0) {
        note += "; over the 10s budget";
        ok = false;
      }
    }
  }
  return ok;
}

bool criterion_isometries(std::string& note) {
  struct Pin {
    const char* name;
    std::size_t order;
  };
  const std::vector<Pin> pins = {
      {"A1", 2}, {"A1xA1", 8}, {"A2", 12}, {"D4", 1152}, {"U", 4}};
  bool ok = true;
  for (const Pin& pin : pins) {
    Lattice lat = builtin_lattice(pin.name);
    auto t0 = Clock::now();
    std::vector<MatZ> brute = oracle::bounded_isometries(lat);
    std::vector<MatZ> engine = isometry_group(lat);
    double dt = elapsed(t0);
    std::set<std::string> bs, es;
    for (const MatZ& f : brute) bs.insert(show(f));
    for (const MatZ& f : engine) es.insert(show(f));
    if (bs.size() != pin.order || bs != es) {
      note += std::string("; ") + pin.name + ": oracle " +
              std::to_string(bs.size()) + " engine " +
              std::to_string(es.size()) + " expected " +
              std::to_string(pin.order);
      ok = false;
    }
    if (std::string(pin.name) == "D4") {
      note += " (D4 " + secs(dt) + ")";
      if (dt >= 30.0) {
        note += "; over the 30s budget";
        ok = false;
      }
    }
  }
  return ok;
}

bool criterion_holonomy(std::string& note) {
  bool ok = true;
  for (const std::string& name : gate_lattices()) {
    Lattice lat = builtin_lattice(name);
    std::size_t r = lat.rank();
    Rng rng(derive_seed(kSeed, "hol." + name));

    for (int t = 0; t < 5 && ok; ++t) {
      CircleElt h = holonomy(lat, constant_path(rng.vec_q(r)),
                             constant_path(rng.vec_q(r)));
      if (!h.is_zero()) {
        note += "; constant loops pick up " + show(h) + " on " + name;
        ok = false;
      }
    }

    for (std::size_t i = 0; i < r && ok; ++i)
      for (std::size_t j = 0; j < r && ok; ++j) {
        VecZ mi = VecZ::unit(r, i);
        VecZ mj = VecZ::unit(r, j);
        CircleElt h = holonomy(lat, straight_loop(mi), straight_loop(mj));
        CircleElt want(Rational(lat.j_pair(mi, mj)) / 2);
        if (!(h == want)) {
          note += "; straight pair (" + std::to_string(i) + "," +
                  std::to_string(j) + ") on " + name + " gives " + show(h);
          ok = false;
        }
      }

    const std::vector<Rational> cut_f = {Rational(1, 5), Rational(1, 2)};
    const std::vector<Rational> cut_g = {Rational(2, 7), Rational(9, 10)};
    for (int t = 0; t < 40 && ok; ++t) {
      PLPath f = random_pl_loop(rng, r);
      PLPath g = random_pl_loop(rng, r);
      CircleElt base = holonomy(lat, f, g);
      if (!(holonomy(lat, refine(f, cut_f), g) == base) ||
          !(holonomy(lat, f, refine(g, cut_g)) == base) ||
          !(holonomy(lat, refine(f, cut_f), refine(g, cut_g)) == base)) {
        note += "; refinement moved the holonomy on " + name;
        ok = false;
      }
    }
  }
  return ok;
}

bool criterion_looijenga(std::string& note) {
  bool ok = true;
  for (const std::string& name : {std::string("A1"), std::string("A2")}) {
    Lattice lat = builtin_lattice(name);
    Report rep = looijenga_check(lat, derive_seed(kSeed, name), 500);
    if (!all_ok(rep, note)) ok = false;
    if (!id_passes(rep, "loo." + name + ".transport_cocycle", note)) ok = false;
    if (!id_passes(rep, "loo." + name + ".inertia_intertwined", note))
      ok = false;
  }
  return ok;
}

bool criterion_determinism(std::string& note) {
  std::string saved;
  bool had = false;
  if (const char* v = std::getenv("CATTORUS_THREADS")) {
    saved = v;
    had = true;
  }
  auto render_all = [] {
    return run_suite(builtin_lattice("A1"), "all", kSeed, 100).render() +
           run_suite(builtin_lattice("A2"), "all", kSeed, 60).render();
  };
  setenv("CATTORUS_THREADS", "1", 1);
  std::string serial = render_all();
  setenv("CATTORUS_THREADS", "3", 1);
  std::string pooled = render_all();
  if (had)
    setenv("CATTORUS_THREADS", saved.c_str(), 1);
  else
    unsetenv("CATTORUS_THREADS");
  if (serial != pooled) {
    note += "; renders differ between 1 and 3 workers";
    return false;
  }
  if (serial.empty()) {
    note += "; empty render";
    return false;
  }
  return true;
}

}  // namespace

int main() {
  Gate gate;
  gate.run(1, "crossed module axioms, seven modules, five lattices",
           criterion_axioms);
  gate.run(2, "interchange and strict associativity in the arrow monoid",
           criterion_coherence);
  gate.run(3, "centre boundary sends generators to minus their image form",
           criterion_centre);
  gate.run(4, "centraliser of the basic representation on A1 A1xA1 U",
           criterion_centraliser);
  gate.run(5, "weak automorphism flagship on U with both mutation probes",
           criterion_flagship);
  gate.run(6, "inertia presentations agree independently of lifts",
           criterion_inertia);
  gate.run(7, "theta counts match the euclidean model oracle",
           criterion_theta);
  gate.run(8, "isometry groups match the bounded entry oracle",
           criterion_isometries);
  gate.run(9, "holonomy closed forms and refinement invariance",
           criterion_holonomy);
  gate.run(10, "transport cocycle and the inertia intertwiner",
           criterion_looijenga);
  gate.run(11, "reports are byte identical across worker counts",
           criterion_determinism);
  if (gate.failures == 0) {
    std::printf("acceptance: all 11 criteria pass\n");
    return 0;
  }
  std::printf("acceptance: %d criterion(s) failed\n", gate.failures);
  return 1;
}
