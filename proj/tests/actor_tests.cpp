#include "doctest.h"

#include "cattorus/actor.hpp"
#include "cattorus/basicrep.hpp"
#include "cattorus/rng.hpp"

using namespace cattorus;

TEST_CASE("the centre boundary negates the sharp weight") {
  XMod zc = centre_theta(builtin_lattice("A1"));
  Elt gen = Elt::of(FibElt{VecZ{Int(1)}, Scalar::one()});
  CHECK(zc.bnd(gen).as<CentreElt>() ==
        (CentreElt{VecQ{Rational(1)}, VecZ{Int(-2)}}));
  Elt scalar_only = Elt::of(FibElt{VecZ{Int(0)}, phase_scalar(Rational(1, 3))});
  CHECK(zc.bnd(scalar_only).as<CentreElt>() ==
        (CentreElt{VecQ{Rational(0)}, VecZ{Int(0)}}));

  XMod zc2 = centre_theta(builtin_lattice("A2"));
  Elt gen2 = Elt::of(FibElt{VecZ{Int(1), Int(0)}, Scalar::one()});
  CHECK(zc2.bnd(gen2).as<CentreElt>() ==
        (CentreElt{VecQ{Rational(1), Rational(0)}, VecZ{Int(-2), Int(1)}}));
}

TEST_CASE("centre elements recover their conjugation data") {
  CHECK(centre_structure_check(builtin_lattice("A1"), 3, 150).ok());
  CHECK(centre_structure_check(builtin_lattice("A2"), 3, 120).ok());
}

TEST_CASE("centre pairs define crossed homomorphisms and compose pointwise") {
  Lattice a2 = builtin_lattice("A2");
  XMod th = make_theta(a2);
  CentreElt c{VecQ{Rational(1, 3), Rational(0)}, VecZ{Int(1), Int(0)}};
  Cross chi = centre_cross(th, a2, c);
  CHECK(cross_law_check(th, chi, 7, 150, "centre_cross_law").status ==
        Status::Pass);

  Cross unit = [&th](const Elt&) { return th.fiber.id; };
  Cross prod = cross_mul(th, unit, chi);
  Rng rng(derive_seed(7, "cross_unit"));
  for (int i = 0; i < 20; ++i) {
    Elt x = th.base.sample(rng);
    CHECK(th.fiber.eq(prod(x), chi(x)));
  }
}

TEST_CASE("conjugation morphisms specialize to pairing twists") {
  Lattice a2 = builtin_lattice("A2");
  XMod th = make_theta(a2);
  Elt x = Elt::of(VecQ{Rational(1, 4), Rational(1, 3)});
  StrictMor ad = ad0(th, x);

  Elt y = Elt::of(VecQ{Rational(2, 5), Rational(0)});
  CHECK(th.base.eq(ad.p0(y), y));
  Elt a = Elt::of(FibElt{VecZ{Int(1), Int(0)}, Scalar::one()});
  CHECK(ad.p1(a).as<FibElt>() ==
        (FibElt{VecZ{Int(1), Int(0)}, phase_scalar(Rational(1, 12))}));

  XMod esx = make_extraspecial(builtin_lattice("A1"));
  Elt gen = Elt::of(ExCov{VecZ{Int(1)}, 0});
  Elt u = Elt::of(FibElt{VecZ{Int(1)}, Scalar::one()});
  CHECK(ad0(esx, gen).p1(u).as<FibElt>() ==
        (FibElt{VecZ{Int(1)}, minus_one_to(Int(1))}));
}

TEST_CASE("inner crossed homomorphisms compose contravariantly") {
  XMod esx = make_extraspecial(builtin_lattice("A1"));
  Elt central = Elt::of(FibElt{VecZ{Int(0)}, phase_scalar(Rational(1, 5))});
  Cross triv = ad1(esx, central);
  Rng rng(derive_seed(9, "ad1"));
  for (int i = 0; i < 10; ++i)
    CHECK(esx.fiber.eq(triv(esx.base.sample(rng)), esx.fiber.id));

  Elt al = Elt::of(FibElt{VecZ{Int(1)}, Scalar::one()});
  Elt be = Elt::of(FibElt{VecZ{Int(2)}, phase_scalar(Rational(1, 3))});
  Cross prod = cross_mul(esx, ad1(esx, al), ad1(esx, be));
  Cross swapped = ad1(esx, esx.fiber.mul(be, al));
  for (int i = 0; i < 25; ++i) {
    Elt x = esx.base.sample(rng);
    CHECK(esx.fiber.eq(prod(x), swapped(x)));
  }

  /* delta of the inner homomorphism is conjugation by the boundary */
  StrictMor lhs = cross_delta(esx, ad1(esx, be));
  StrictMor rhs = ad0(esx, esx.bnd(be));
  for (int i = 0; i < 25; ++i) {
    Elt x = esx.base.sample(rng);
    CHECK(esx.base.eq(lhs.p0(x), rhs.p0(x)));
  }
}

TEST_CASE("the centraliser of the identity is the centre") {
  CHECK(centraliser_of_identity_check(builtin_lattice("A1"), 5, 150).ok());
  CHECK(centraliser_of_identity_check(builtin_lattice("A2"), 5, 100).ok());
}

TEST_CASE("level and weight scale the representation of arrow labels") {
  Lattice a1 = builtin_lattice("A1");
  RepHom r11 = make_rep(a1, 1, 1);
  CHECK(r11.hom.p1(Elt::of(FibElt{VecZ{Int(1)}, Scalar::one()}))
            .as<LaurentUnit>() == (LaurentUnit{Scalar::one(), VecZ{Int(1)}}));

  RepHom r23 = make_rep(a1, 2, 3);
  CHECK(r23.hom.p1(Elt::of(FibElt{VecZ{Int(1)}, phase_scalar(Rational(1, 12))}))
            .as<LaurentUnit>() ==
        (LaurentUnit{phase_scalar(Rational(1, 2)), VecZ{Int(2)}}));
  CHECK(r23.hom.p1(Elt::of(FibElt{VecZ{Int(0)}, phase_scalar(Rational(1, 5))}))
            .as<LaurentUnit>() ==
        (LaurentUnit{phase_scalar(Rational(6, 5)), VecZ{Int(0)}}));
  CHECK(r23.hom.p0(Elt::of(TeePm{VecQ{Rational(1, 4)}, -1})).as<TorusAut>() ==
        (TorusAut{VecQ{Rational(3, 4)}, -1}));
}

TEST_CASE("representation morphism checks pass across levels") {
  Lattice a1 = builtin_lattice("A1");
  CHECK(verify_rep(a1, make_rep(a1, 1, 1), 17, 250).ok());
  CHECK(verify_rep(a1, make_rep(a1, 0, 2), 17, 150).ok());
  Lattice a2 = builtin_lattice("A2");
  CHECK(verify_rep(a2, make_rep(a2, 1, 1), 17, 200).ok());
  CHECK(verify_rep(a2, make_rep(a2, 2, 3), 17, 150).ok());
}

TEST_CASE("centraliser members of the basic representation evaluate exactly") {
  Lattice a1 = builtin_lattice("A1");
  CentrElt m10 = centralizer_member(a1, VecZ{Int(1)}, 0);
  CHECK(m10.h.as<TorusAut>() == (TorusAut{VecQ{Rational(1, 2)}, 1}));
  CHECK(m10.chi(Elt::of(TeePm{VecQ{Rational(1)}, 1})).as<LaurentUnit>() ==
        (LaurentUnit{phase_scalar(Rational(1, 2)), VecZ{Int(0)}}));

  CentrElt m01 = centralizer_member(a1, VecZ{Int(0)}, 1);
  CHECK(m01.chi(Elt::of(TeePm{VecQ{Rational(2, 7)}, -1})).as<LaurentUnit>() ==
        (LaurentUnit{phase_scalar(Rational(1, 2)), VecZ{Int(0)}}));

  RepHom rb = make_rep(a1, 1, 1);
  for (int n : {0, 1})
    for (int i : {0, 1}) {
      CentrElt m = centralizer_member(a1, VecZ{Int(n)}, i);
      CAPTURE(n);
      CAPTURE(i);
      CHECK(centraliser_member_check(rb.hom, m, 13, 120, "rbas_member").ok());
    }
}

TEST_CASE("the double cover embeds into the centraliser of the basic rep") {
  Report r = verify_centralizer_theorem(builtin_lattice("A1"), 23, 150);
  CHECK(r.ok());
  bool saw_components = false;
  for (const CheckResult& c : r.checks)
    if (c.id == "cthm.A1.pi0_distinct") saw_components = c.status == Status::Pass;
  CHECK(saw_components);
}
