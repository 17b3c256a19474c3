#include "doctest.h"

#include <string>

#include "cattorus/linebundle.hpp"
#include "cattorus/rng.hpp"
#include "oracles.hpp"

using namespace cattorus;

namespace {

/* A loop through random breakpoints that descends to the torus: the
 * endpoint differs from the start by an integral coweight. */
PLPath random_pl_loop(Rng& rng, std::size_t rank) {
  VecQ start = rng.vec_q(rank, 2, 12);
  std::vector<std::pair<Rational, VecQ>> bp;
  bp.emplace_back(Rational(0), start);
  bp.emplace_back(Rational(1, 3), rng.vec_q(rank, 2, 12));
  bp.emplace_back(Rational(3, 4), rng.vec_q(rank, 2, 12));
  bp.emplace_back(Rational(1), start + to_q(rng.vec_z(rank, 2)));
  return pl_path(std::move(bp));
}

}  // namespace

TEST_CASE("relifting a fiber point rescales by the lift pairing") {
  Lattice a1 = builtin_lattice("A1");
  FiberPoint p = fiber_point(a1, VecQ{Rational(1, 2)}, VecQ{Rational(1, 3)},
                             VecQ{Rational(1, 2)}, Scalar::one());
  FiberPoint q = relift(a1, p, VecZ{Int(1)});
  CHECK(q.lift == VecQ{Rational(3, 2)});
  CHECK(q.value == Scalar::from_phase(CircleElt(-1, 3)));
  CHECK(q.s == p.s);

  CHECK_THROWS_AS(fiber_point(a1, VecQ{Rational(1, 2)}, VecQ{Rational(0)},
                              VecQ{Rational(1, 3)}, Scalar::one()),
                  std::invalid_argument);
}

TEST_CASE("integral lifts trivialize the transition phase") {
  Lattice a1 = builtin_lattice("A1");
  CHECK(gerbe_cocycle(a1, VecQ{Rational(1)}, VecQ{Rational(2)}).is_zero());
  CHECK(gerbe_associator(a1, VecQ{Rational(1, 3)}, VecQ{Rational(2, 7)},
                         VecQ{Rational(5, 11)})
            .is_zero());
  Lattice a2 = builtin_lattice("A2");
  Rng rng(derive_seed(31, "assoc"));
  for (int i = 0; i < 50; ++i)
    CHECK(gerbe_associator(a2, rng.vec_q(2), rng.vec_q(2), rng.vec_q(2))
              .is_zero());
}

TEST_CASE("holonomy vanishes on constant loops and halves on straight ones") {
  Lattice a2 = builtin_lattice("A2");
  PLPath cx = constant_path(VecQ{Rational(1, 3), Rational(2, 5)});
  PLPath cy = constant_path(VecQ{Rational(0), Rational(1, 7)});
  CHECK(holonomy(a2, cx, cy).is_zero());

  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      VecZ m = VecZ::unit(2, i);
      VecZ n = VecZ::unit(2, j);
      CHECK(holonomy(a2, straight_loop(m), straight_loop(n)) ==
            CircleElt(Rational(a2.j_pair(m, n)) / 2));
    }

  /* winding against a constant marks the pairing */
  Lattice a1 = builtin_lattice("A1");
  CHECK(holonomy(a1, straight_loop(VecZ{Int(1)}),
                 constant_path(VecQ{Rational(2, 7)})) == CircleElt(2, 7));
}

TEST_CASE("holonomy is invariant under breakpoint refinement") {
  Lattice a2 = builtin_lattice("A2");
  Rng rng(derive_seed(31, "refine"));
  for (int i = 0; i < 40; ++i) {
    PLPath f = random_pl_loop(rng, 2);
    PLPath g = random_pl_loop(rng, 2);
    CircleElt base = holonomy(a2, f, g);
    PLPath fr = refine(f, {Rational(1, 5), Rational(1, 2), Rational(9, 10)});
    PLPath gr = refine(g, {Rational(2, 7), Rational(2, 3)});
    CHECK(holonomy(a2, fr, g) == base);
    CHECK(holonomy(a2, f, gr) == base);
    CHECK(holonomy(a2, fr, gr) == base);
  }
}

TEST_CASE("coweight transport shifts the formal exponent quadratically") {
  Lattice a1 = builtin_lattice("A1");
  LooPoint p{VecQ{Rational(0)}, VecQ{Rational(0)}, CircleElt(), Rational(0)};
  LooPoint q = looijenga_transport(a1, p, VecZ{Int(1)});
  CHECK(q.qexp == Rational(-1));
  CHECK(q.phase.is_zero());
  CHECK(q.x_tau == VecQ{Rational(1)});

  CHECK(looijenga_transport(a1, p, VecZ::zero(1)) == p);

  Rng rng(derive_seed(37, "transport"));
  for (int i = 0; i < 60; ++i) {
    LooPoint r{rng.vec_q(1), rng.vec_q(1), rng.circle(), rng.rat()};
    VecZ m = rng.vec_z(1, 4), n = rng.vec_z(1, 4);
    CHECK(looijenga_transport(a1, looijenga_transport(a1, r, m), n) ==
          looijenga_transport(a1, r, m + n));
  }
}

TEST_CASE("the inertia chart lands with a quadratic exponent") {
  Lattice a1 = builtin_lattice("A1");
  LooPoint p = looijenga_from_inertia(a1, VecQ{Rational(1, 2)},
                                      VecQ{Rational(1, 3)}, CircleElt());
  CHECK(p.qexp == Rational(-1, 4));

  LooPoint z = looijenga_from_inertia(a1, VecQ{Rational(0)},
                                      VecQ{Rational(1, 3)}, CircleElt(1, 7));
  CHECK(z.qexp == Rational(0));
  CHECK(z.x_one == VecQ{Rational(1, 3)});
}

TEST_CASE("theta series match the coordinate model oracle") {
  CHECK(theta_series(builtin_lattice("A1"), 9).counts ==
        oracle::euclidean_theta("A1", 9));
  CHECK(theta_series(builtin_lattice("A2"), 5).counts ==
        oracle::euclidean_theta("A2", 5));
  CHECK(theta_series(builtin_lattice("D4"), 4).counts ==
        oracle::euclidean_theta("D4", 4));

  ThetaSeries a1 = theta_series(builtin_lattice("A1"), 9);
  CHECK(a1.counts[0] == 1);
  CHECK(a1.counts[1] == 2);
  CHECK(a1.counts[4] == 2);
  CHECK(a1.counts[9] == 2);
  CHECK(a1.counts[2] == 0);

  CHECK(theta_series(lattice_from_j("Z0", MatZ(0, 0)), 3).counts ==
        (std::vector<Int>{Int(1), Int(0), Int(0), Int(0)}));

  std::string text = theta_export(a1);
  CHECK(text.substr(0, 8) == "0\t1\n1\t2\n");
  CHECK_THROWS_AS(theta_series(builtin_lattice("U"), 2),
                  std::invalid_argument);
}

TEST_CASE("weight orbits follow the doubled shift") {
  Lattice a1 = builtin_lattice("A1");
  CHECK(orbit_representative(a1, Int(1), VecZ{Int(-4)}) == VecZ{Int(0)});
  CHECK(orbit_representative(a1, Int(1), VecZ{Int(0)}) == VecZ{Int(0)});
  CHECK(orbit_representative(a1, Int(2), VecZ{Int(-3)}) == VecZ{Int(1)});
  CHECK(orbit_representative(a1, Int(2), VecZ{Int(5)}) == VecZ{Int(1)});
  CHECK(orbit_representative(a1, Int(0), VecZ{Int(7)}) == VecZ{Int(7)});

  std::vector<std::pair<VecZ, Int>> table = {
      {VecZ{Int(-2)}, Int(3)}, {VecZ{Int(0)}, Int(3)}, {VecZ{Int(2)}, Int(3)}};
  auto orbits = class_function_decompose(a1, Int(1), table);
  REQUIRE(orbits.size() == 1);
  CHECK(orbits[0].rep == VecZ{Int(0)});
  CHECK(orbits[0].members.size() == 3);
  CHECK(orbits[0].constant);
  CHECK(orbits[0].closed);

  auto singletons = class_function_decompose(a1, Int(0), table);
  CHECK(singletons.size() == 3);
}

TEST_CASE("weighted refinements stay consistent with the plain series") {
  Lattice a2 = builtin_lattice("A2");
  auto terms = theta_series_weighted(a2, 3, VecZ::zero(2), Int(1));
  auto plain = theta_series(a2, 3);
  std::vector<Int> sums(4, Int(0));
  for (const WeightedTerm& t : terms)
    sums[static_cast<std::size_t>(static_cast<long long>(t.half_norm))] +=
        t.count;
  CHECK(sums == plain.counts);
}

TEST_CASE("line bundle verification reports stay green") {
  Lattice a1 = builtin_lattice("A1");
  Lattice a2 = builtin_lattice("A2");
  CHECK(gerbe_check(a1, 41, 150).ok());
  CHECK(gerbe_check(a2, 41, 100).ok());
  CHECK(holonomy_check(a1, 41, 100).ok());
  CHECK(holonomy_check(a2, 41, 80).ok());
  CHECK(looijenga_check(a1, 41, 150).ok());
  CHECK(looijenga_check(a2, 41, 100).ok());
  CHECK(theta_check(a1, 6, 41, 60).ok());
  CHECK(class_function_check(a1, 41, 80).ok());
}
