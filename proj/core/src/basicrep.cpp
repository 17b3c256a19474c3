#include "cattorus/basicrep.hpp"

#include <sstream>

#include "cattorus/rng.hpp"

namespace cattorus {

std::string show(const TorusAut& a) {
  return "(exp" + show(a.t) + ", " + (a.eps > 0 ? "+1" : "-1") + ")";
}
std::string show(const LaurentUnit& u) {
  return show(u.coeff) + "*e" + show(u.weight);
}

namespace {

Group make_torus_aut(const Lattice& lat) {
  std::size_t r = lat.rank();
  Group g;
  g.name = lat.name + ".taut";
  g.id = Elt::of(TorusAut{VecQ::zero(r), 1});
  g.mul = [](const Elt& a, const Elt& b) {
    const TorusAut& u = a.as<TorusAut>();
    const TorusAut& v = b.as<TorusAut>();
    VecQ t = u.eps > 0 ? u.t + v.t : u.t - v.t;
    return Elt::of(TorusAut{q_frac(t), u.eps * v.eps});
  };
  g.inv = [](const Elt& a) {
    const TorusAut& u = a.as<TorusAut>();
    VecQ t = u.eps > 0 ? -u.t : u.t;
    return Elt::of(TorusAut{q_frac(t), u.eps});
  };
  g.eq = [](const Elt& a, const Elt& b) {
    return a.as<TorusAut>() == b.as<TorusAut>();
  };
  g.sample = [r](Rng& rng) {
    return Elt::of(TorusAut{q_frac(rng.vec_q(r, 2, 12)), rng.sign()});
  };
  g.show = [](const Elt& a) { return show(a.as<TorusAut>()); };
  return g;
}

Group make_laurent(const Lattice& lat) {
  std::size_t r = lat.rank();
  Group g;
  g.name = lat.name + ".laurent";
  g.id = Elt::of(LaurentUnit{Scalar::one(), VecZ::zero(r)});
  g.mul = [](const Elt& a, const Elt& b) {
    const LaurentUnit& u = a.as<LaurentUnit>();
    const LaurentUnit& v = b.as<LaurentUnit>();
    return Elt::of(LaurentUnit{u.coeff * v.coeff, u.weight + v.weight});
  };
  g.inv = [](const Elt& a) {
    const LaurentUnit& u = a.as<LaurentUnit>();
    return Elt::of(LaurentUnit{u.coeff.inv(), -u.weight});
  };
  g.eq = [](const Elt& a, const Elt& b) {
    return a.as<LaurentUnit>() == b.as<LaurentUnit>();
  };
  g.sample = [r](Rng& rng) {
    Scalar c(Rational(rng.int_in(1, 8), rng.int_in(1, 8)), rng.circle());
    return Elt::of(LaurentUnit{c, rng.vec_z(r, 3)});
  };
  g.show = [](const Elt& a) { return show(a.as<LaurentUnit>()); };
  return g;
}

}  // namespace

XMod make_rep_target(const Lattice& lat) {
  XMod xm;
  xm.name = lat.name + ".rep_target";
  xm.base = make_torus_aut(lat);
  xm.fiber = make_laurent(lat);
  Elt id = xm.base.id;
  xm.act = [](const Elt& a, const Elt& x) {
    const LaurentUnit& u = a.as<LaurentUnit>();
    const TorusAut& g = x.as<TorusAut>();
    Scalar c = u.coeff * phase_scalar(dot(to_q(u.weight), g.t));
    VecZ w = g.eps > 0 ? u.weight : -u.weight;
    return Elt::of(LaurentUnit{c, w});
  };
  xm.bnd = [id](const Elt&) { return id; };
  return xm;
}

RepHom make_rep(const Lattice& lat, const Int& k, const Int& n) {
  StrictMor f;
  f.src = make_theta_prime(lat, LabelKind::Cx);
  f.tgt = make_rep_target(lat);
  Lattice l = lat;
  Rational nq(n);
  f.p0 = [nq](const Elt& a) {
    const TeePm& u = a.as<TeePm>();
    return Elt::of(TorusAut{q_frac(u.x.scaled(nq)), u.eps});
  };
  Int kn = k * n;
  f.p1 = [l, k, kn](const Elt& a) {
    const FibElt& u = a.as<FibElt>();
    return Elt::of(LaurentUnit{u.z.pow(kn), l.j_sharp(u.m).scaled(k)});
  };
  return RepHom{k, n, f};
}

Report verify_rep(const Lattice& lat, const RepHom& rep, std::uint64_t seed,
                  int trials) {
  std::ostringstream tag;
  tag << "rep." << lat.name << ".k" << rep.k << "n" << rep.n;
  std::string p = tag.str();

  Report out = strict_check(rep.hom, seed, trials, p);
  const XMod& src = rep.hom.src;
  const XMod& tgt = rep.hom.tgt;
  std::size_t r = lat.rank();

  {
    std::string id = p + ".scalar_power";
    Rng rng(derive_seed(seed, id));
    CheckResult res = pass_result(id, trials);
    Int kn = rep.k * rep.n;
    for (int t = 0; t < trials; ++t) {
      Scalar z(Rational(rng.int_in(1, 9), rng.int_in(1, 9)), rng.circle());
      Elt image = rep.hom.p1(Elt::of(FibElt{VecZ::zero(r), z}));
      if (!(image.as<LaurentUnit>() == LaurentUnit{z.pow(kn), VecZ::zero(r)})) {
        res = fail_result(id, t + 1, "z=" + show(z));
        break;
      }
    }
    out.add(res);
  }

  {
    // The corrupted weight k*J_flat(m) coincides with the true one
    // exactly when J is symmetric, so only asymmetric J can witness.
    std::string id = p + ".weight_corrupted";
    if (lat.j == lat.j.transposed()) {
      out.add(skip_result(id, "J symmetric, corrupted map identical"));
    } else {
      Rng rng(derive_seed(seed, id));
      Lattice l = lat;
      Int k = rep.k;
      Int kn = rep.k * rep.n;
      auto bad_p1 = [l, k, kn](const Elt& a) {
        const FibElt& u = a.as<FibElt>();
        return Elt::of(LaurentUnit{u.z.pow(kn), l.j_flat(u.m).scaled(k)});
      };
      CheckResult res = fail_result(id, 200, "no witness in 200 trials");
      for (int t = 0; t < 200; ++t) {
        Elt a = src.fiber.sample(rng);
        Elt x = src.base.sample(rng);
        Elt lhs = bad_p1(src.act(a, x));
        Elt rhs = tgt.act(bad_p1(a), rep.hom.p0(x));
        if (!tgt.fiber.eq(lhs, rhs)) {
          res = pass_result(id, t + 1);
          res.witness = "a=" + src.fiber.show(a) + " x=" + src.base.show(x);
          break;
        }
      }
      out.add(res);
    }
  }

  return out;
}

CentrElt centralizer_member(const Lattice& lat, const VecZ& n, int iota) {
  Lattice l = lat;
  VecQ nq = to_q(n);
  VecZ wminus = -lat.j_flat(n);
  Elt h = Elt::of(TorusAut{q_frac(nq.scaled(Rational(1, 2))), 1});
  auto chi = [l, nq, wminus, iota](const Elt& s) {
    const TeePm& u = s.as<TeePm>();
    std::size_t r = nq.size();
    Rational ph = l.j_pair(u.x, nq) * Rational(1, 2) +
                  Rational(iota * (1 - u.eps), 4);
    VecZ w = u.eps > 0 ? VecZ::zero(r) : wminus;
    return Elt::of(LaurentUnit{phase_scalar(ph), w});
  };
  return CentrElt{h, chi};
}

XMod make_rep_centraliser(const Lattice& lat) {
  std::size_t r = lat.rank();
  RepHom rb = make_rep(lat, Int(1), Int(1));

  std::vector<Elt> probes;
  probes.push_back(Elt::of(TeePm{VecQ::zero(r), 1}));
  probes.push_back(Elt::of(TeePm{VecQ::zero(r), -1}));
  for (std::size_t j = 0; j < r; ++j) {
    VecQ e = VecQ::zero(r);
    e[j] = Rational(1);
    probes.push_back(Elt::of(TeePm{e, 1}));
    probes.push_back(Elt::of(TeePm{e, -1}));
    e[j] = Rational(1, 2);
    probes.push_back(Elt::of(TeePm{e, 1}));
    e[j] = Rational(1, 3);
    probes.push_back(Elt::of(TeePm{e, -1}));
  }

  XMod c = make_centraliser("C(r_bas)." + lat.name, rb.hom,
                            [](Rng&) { return CentrElt{}; }, probes);

  // Sample F0(n, iota) * bnd(unit); by the theorem this reaches every
  // component, and bnd-multiples move the sample off the closed form.
  Group cb = c.base;
  auto bnd = c.bnd;
  Lattice l = lat;
  c.base.sample = [cb, bnd, l, r](Rng& rng) {
    Elt a = Elt::of(
        centralizer_member(l, rng.vec_z(r, 4), rng.bit() ? 1 : 0));
    Scalar z(Rational(rng.int_in(1, 8), rng.int_in(1, 8)), rng.circle());
    Elt b = bnd(Elt::of(LaurentUnit{z, rng.vec_z(r, 3)}));
    return cb.mul(a, b);
  };
  return c;
}

StrictMor extraspecial_to_centraliser(const Lattice& lat) {
  StrictMor f;
  f.src = make_extraspecial(lat);
  f.tgt = make_rep_centraliser(lat);
  Lattice l = lat;
  f.p0 = [l](const Elt& a) {
    const ExCov& u = a.as<ExCov>();
    return Elt::of(centralizer_member(l, u.m, u.iota));
  };
  f.p1 = [l](const Elt& a) {
    const FibElt& u = a.as<FibElt>();
    return Elt::of(LaurentUnit{u.z, -l.j_flat(u.m)});
  };
  return f;
}

Report verify_centralizer_theorem(const Lattice& lat, std::uint64_t seed,
                                  int trials) {
  std::string p = "cthm." + lat.name;
  Report out;
  std::size_t r = lat.rank();
  if (r > 4) {
    out.add(skip_result(p + ".rank", "rank > 4, component enumeration too large"));
    return out;
  }

  RepHom rb = make_rep(lat, Int(1), Int(1));
  StrictMor F = extraspecial_to_centraliser(lat);
  const XMod& esx = F.src;
  const XMod& c = F.tgt;
  const XMod& tgt = rb.hom.tgt;

  out.merge(strict_check(F, seed, trials, p + ".F"));

  {
    std::string id = p + ".membership";
    Rng rng(derive_seed(seed, id));
    CheckResult res = pass_result(id, trials);
    for (int t = 0; t < trials && res.status == Status::Pass; ++t) {
      CentrElt m = centralizer_member(lat, rng.vec_z(r, 4),
                                      rng.bit() ? 1 : 0);
      Elt s = rb.hom.src.base.sample(rng);
      Elt u = rb.hom.src.base.sample(rng);
      Elt a = rb.hom.src.fiber.sample(rng);

      Elt x = rb.hom.p0(s);
      Elt lhs0 = tgt.bnd(m.chi(s));
      Elt rhs0 = tgt.base.mul(
          tgt.base.mul(tgt.base.inv(x), tgt.base.inv(m.h)),
          tgt.base.mul(x, m.h));
      Elt fa = rb.hom.p1(a);
      Elt lhs1 = m.chi(rb.hom.src.bnd(a));
      Elt rhs1 = tgt.fiber.mul(tgt.fiber.inv(fa), tgt.act(fa, m.h));
      Elt lhs2 = m.chi(rb.hom.src.base.mul(s, u));
      Elt rhs2 = tgt.fiber.mul(tgt.act(m.chi(s), rb.hom.p0(u)), m.chi(u));

      if (!tgt.base.eq(lhs0, rhs0))
        res = fail_result(id, t + 1, "law 1 at s=" + rb.hom.src.base.show(s));
      else if (!tgt.fiber.eq(lhs1, rhs1))
        res = fail_result(id, t + 1, "law 2 at a=" + rb.hom.src.fiber.show(a));
      else if (!tgt.fiber.eq(lhs2, rhs2))
        res = fail_result(id, t + 1, "law 3 at s=" + rb.hom.src.base.show(s));
    }
    out.add(res);
  }

  {
    // Scalar labels (0, z) are exactly the kernel of the extraspecial
    // boundary; their images must be exactly the weight-zero units and
    // exactly the kernel of the centraliser boundary.
    std::string id = p + ".pi1_constants";
    Rng rng(derive_seed(seed, id));
    CheckResult res = pass_result(id, trials);
    for (int t = 0; t < trials && res.status == Status::Pass; ++t) {
      Scalar z(Rational(rng.int_in(1, 9), rng.int_in(1, 9)), rng.circle());
      LaurentUnit img =
          F.p1(Elt::of(FibElt{VecZ::zero(r), z})).as<LaurentUnit>();
      VecZ w = rng.vec_z(r, 3);
      bool wzero = w == VecZ::zero(r);
      Elt unit = Elt::of(LaurentUnit{z, w});
      bool in_kernel = c.base.eq(c.bnd(unit), c.base.id);
      if (!(img == LaurentUnit{z, VecZ::zero(r)}))
        res = fail_result(id, t + 1, "image " + show(img));
      else if (in_kernel != wzero)
        res = fail_result(id, t + 1,
                          "bnd kernel mismatch at w=" + show(w));
    }
    out.add(res);
  }

  {
    // In-model Liouville step: a unit fixed by every translation and by
    // inversion has weight zero, and weight-zero units are fixed by all.
    std::string id = p + ".pi1_invariance";
    Rng rng(derive_seed(seed, id));
    CheckResult res = pass_result(id, trials);
    for (int t = 0; t < trials && res.status == Status::Pass; ++t) {
      Scalar z(Rational(rng.int_in(1, 9), rng.int_in(1, 9)), rng.circle());
      Elt fixed = Elt::of(LaurentUnit{z, VecZ::zero(r)});
      Elt g = tgt.base.sample(rng);
      if (!tgt.fiber.eq(tgt.act(fixed, g), fixed)) {
        res = fail_result(id, t + 1, "constant moved by " + tgt.base.show(g));
        break;
      }
      VecZ w = rng.vec_z(r, 3);
      if (w == VecZ::zero(r)) w[rng.int_in(0, (long long)r - 1)] = Int(1);
      std::size_t j = 0;
      while (w[j] == 0) ++j;
      VecQ probe = VecQ::zero(r);
      Int den = Int(2) * abs(w[j]) + Int(1);
      probe[j] = Rational(Int(1), den);
      Elt moving = Elt::of(LaurentUnit{z, w});
      Elt shift = Elt::of(TorusAut{q_frac(probe), 1});
      if (tgt.fiber.eq(tgt.act(moving, shift), moving))
        res = fail_result(id, t + 1, "weight " + show(w) + " not moved");
    }
    out.add(res);
  }

  {
    // Pairwise distinctness of the 2^{rank+1} components: distinct
    // translation parts separate immediately; otherwise the difference
    // would have to bound against a unit whose doubled weight is read
    // off at (0, -1), and the candidate never matches extensionally.
    std::string id = p + ".pi0_distinct";
    std::vector<Elt> reps;
    for (const VecZ& n : f2_vectors(r)) {
      reps.push_back(Elt::of(centralizer_member(lat, n, 0)));
      reps.push_back(Elt::of(centralizer_member(lat, n, 1)));
    }
    Elt at_inv = Elt::of(TeePm{VecQ::zero(r), -1});
    long long pairs = 0;
    CheckResult res;
    res.id = id;
    for (std::size_t i = 0; i < reps.size() && res.status == Status::Pass;
         ++i) {
      for (std::size_t k = i + 1; k < reps.size(); ++k) {
        ++pairs;
        const CentrElt& u = reps[i].as<CentrElt>();
        const CentrElt& v = reps[k].as<CentrElt>();
        if (!tgt.base.eq(u.h, v.h)) continue;
        Elt d = c.base.mul(c.base.inv(reps[i]), reps[k]);
        LaurentUnit at = d.as<CentrElt>().chi(at_inv).as<LaurentUnit>();
        bool halvable = true;
        VecZ half = VecZ::zero(r);
        for (std::size_t q = 0; q < r; ++q) {
          if (mod2(at.weight[q]) != 0) halvable = false;
          else half[q] = at.weight[q] / 2;
        }
        if (!halvable) continue;
        Elt cand = c.bnd(Elt::of(LaurentUnit{Scalar::one(), half}));
        if (c.base.eq(d, cand)) {
          res = fail_result(id, pairs,
                            "components " + std::to_string(i) + " and " +
                                std::to_string(k) + " merge");
          break;
        }
      }
    }
    if (res.status == Status::Pass) res = pass_result(id, pairs);
    out.add(res);
  }

  {
    // Every 2-torsion translation is the h-part of some component.
    std::string id = p + ".pi0_onto";
    CheckResult res = pass_result(id, (long long)(1u << r));
    for (const VecQ& t : two_torsion(lat)) {
      bool hit = false;
      for (const VecZ& n : f2_vectors(r)) {
        CentrElt m = centralizer_member(lat, n, 0);
        if (m.h.as<TorusAut>() == TorusAut{t, 1}) hit = true;
      }
      if (!hit) {
        res = fail_result(id, (long long)(1u << r), "missed " + show(t));
        break;
      }
    }
    out.add(res);
  }

  {
    // Forgetting iota identifies (n,0) with (n,1), so the product rule
    // must slip on a pair whose cocycle J(n',n) is odd.
    std::string id = p + ".mutation_iota";
    Rng rng(derive_seed(seed, id));
    CheckResult res = fail_result(id, 200, "no witness in 200 trials");
    for (int t = 0; t < 200; ++t) {
      Elt u = esx.base.sample(rng);
      Elt v = esx.base.sample(rng);
      auto drop = [&lat](const Elt& a) {
        return Elt::of(centralizer_member(lat, a.as<ExCov>().m, 0));
      };
      Elt lhs = drop(esx.base.mul(u, v));
      Elt rhs = c.base.mul(drop(u), drop(v));
      if (!c.base.eq(lhs, rhs)) {
        res = pass_result(id, t + 1);
        res.witness = "u=" + esx.base.show(u) + " v=" + esx.base.show(v);
        break;
      }
    }
    out.add(res);
  }

  {
    std::string id = p + ".mutation_weight";
    if (lat.j == lat.j.transposed()) {
      out.add(skip_result(id, "J symmetric, corrupted map identical"));
    } else {
      Rng rng(derive_seed(seed, id));
      Lattice l = lat;
      auto bad_p1 = [l](const Elt& a) {
        const FibElt& u = a.as<FibElt>();
        return Elt::of(LaurentUnit{u.z, -l.j_sharp(u.m)});
      };
      CheckResult res = fail_result(id, 200, "no witness in 200 trials");
      for (int t = 0; t < 200; ++t) {
        Elt a = esx.fiber.sample(rng);
        Elt u = esx.base.sample(rng);
        Elt lhs = bad_p1(esx.act(a, u));
        Elt rhs = c.act(bad_p1(a), F.p0(u));
        if (!c.fiber.eq(lhs, rhs)) {
          res = pass_result(id, t + 1);
          res.witness = "a=" + esx.fiber.show(a) + " u=" + esx.base.show(u);
          break;
        }
      }
      out.add(res);
    }
  }

  return out;
}

}  // namespace cattorus
