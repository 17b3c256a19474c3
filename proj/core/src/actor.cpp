#include "cattorus/actor.hpp"

#include <sstream>

namespace cattorus {

CheckResult cross_law_check(const XMod& xm, const Cross& chi,
                            std::uint64_t seed, int trials,
                            const std::string& id) {
  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    Elt x = xm.base.sample(rng);
    Elt y = xm.base.sample(rng);
    Elt lhs = chi(xm.base.mul(x, y));
    Elt rhs = xm.fiber.mul(xm.act(chi(x), y), chi(y));
    if (!xm.fiber.eq(lhs, rhs))
      return fail_result(id, t + 1,
                         "x=" + xm.base.show(x) + " y=" + xm.base.show(y));
  }
  return pass_result(id, trials);
}

Cross cross_mul(const XMod& xm, const Cross& a, const Cross& b) {
  return [xm, a, b](const Elt& x) {
    Elt bx = b(x);
    return xm.fiber.mul(bx, a(xm.base.mul(x, xm.bnd(bx))));
  };
}

StrictMor cross_delta(const XMod& xm, const Cross& chi) {
  StrictMor d;
  d.src = xm;
  d.tgt = xm;
  d.p0 = [xm, chi](const Elt& x) { return xm.base.mul(x, xm.bnd(chi(x))); };
  d.p1 = [xm, chi](const Elt& a) {
    return xm.fiber.mul(a, chi(xm.bnd(a)));
  };
  return d;
}

StrictMor ad0(const XMod& xm, const Elt& x) {
  Elt xi = xm.base.inv(x);
  StrictMor d;
  d.src = xm;
  d.tgt = xm;
  d.p0 = [xm, x, xi](const Elt& y) {
    return xm.base.mul(xm.base.mul(x, y), xi);
  };
  d.p1 = [xm, xi](const Elt& a) { return xm.act(a, xi); };
  return d;
}

Cross ad1(const XMod& xm, const Elt& alpha) {
  Elt ai = xm.fiber.inv(alpha);
  return [xm, alpha, ai](const Elt& x) {
    return xm.fiber.mul(xm.act(alpha, x), ai);
  };
}

std::string show(const CentreElt& c) {
  return "(" + show(c.x) + ", " + show(c.lam) + ")";
}

XMod centre_theta(const Lattice& lat, LabelKind kind) {
  std::size_t r = lat.rank();

  Group base;
  base.name = "Z0(Theta_" + lat.name + ")";
  base.id = Elt::of<CentreElt>(CentreElt{VecQ::zero(r), VecZ::zero(r)});
  base.mul = [](const Elt& a, const Elt& b) {
    const auto& u = a.as<CentreElt>();
    const auto& v = b.as<CentreElt>();
    return Elt::of<CentreElt>(CentreElt{u.x + v.x, u.lam + v.lam});
  };
  base.inv = [](const Elt& a) {
    const auto& u = a.as<CentreElt>();
    return Elt::of<CentreElt>(CentreElt{-u.x, -u.lam});
  };
  base.eq = [](const Elt& a, const Elt& b) {
    return a.as<CentreElt>() == b.as<CentreElt>();
  };
  base.sample = [r](Rng& rng) {
    return Elt::of<CentreElt>(CentreElt{rng.vec_q(r), rng.vec_z(r)});
  };
  base.show = [](const Elt& a) { return show(a.as<CentreElt>()); };

  XMod xm;
  xm.name = "Z(Theta_" + lat.name + ")";
  xm.base = base;
  xm.fiber = make_fiber(lat, kind);
  xm.act = [lat](const Elt& a, const Elt& x) {
    const auto& u = a.as<FibElt>();
    const auto& c = x.as<CentreElt>();
    return Elt::of<FibElt>(
        FibElt{u.m, u.z * phase_scalar(lat.j_pair(to_q(u.m), c.x))});
  };
  xm.bnd = [lat](const Elt& a) {
    const auto& u = a.as<FibElt>();
    return Elt::of<CentreElt>(CentreElt{to_q(u.m), -lat.i_sharp(u.m)});
  };
  return xm;
}

Cross centre_cross(const XMod& theta, const Lattice& lat, const CentreElt& c,
                   LabelKind) {
  std::size_t r = lat.rank();
  VecQ row = lat.j_flat(c.x) + to_q(c.lam);
  return [r, row](const Elt& y) {
    return Elt::of<FibElt>(
        FibElt{VecZ::zero(r), phase_scalar(dot(row, y.as<VecQ>()))});
  };
}

Report centre_structure_check(const Lattice& lat, std::uint64_t seed,
                              int trials) {
  Report rep;
  std::size_t r = lat.rank();
  XMod theta = make_theta(lat);
  XMod zc = centre_theta(lat);

  // Bound on the entries of the functional hidden in the conjugation
  // phases of a generator, so a single probe denominator pins them.
  Int bound = 1;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      bound += abs(lat.j.at(i, j));
  Int den = 2 * bound + 1;

  {
    std::string id = "centre." + lat.name + ".generator_boundary";
    std::string bad;
    for (std::size_t k = 0; k < r && bad.empty(); ++k) {
      Elt alpha = Elt::of<FibElt>(FibElt{VecZ::unit(r, k), Scalar::one()});
      Cross chi = ad1(theta, theta.fiber.inv(alpha));
      VecQ x = to_q(VecZ::unit(r, k));
      VecZ cvec = VecZ::zero(r);
      bool solved = true;
      for (std::size_t j = 0; j < r && solved; ++j) {
        VecQ probe = VecQ::zero(r);
        probe[j] = Rational(1, den);
        FibElt val = chi(Elt::of<VecQ>(probe)).as<FibElt>();
        if (!val.m.is_zero() || val.z.mag() != Rational(1)) {
          solved = false;
          break;
        }
        Rational scaled = val.z.phase().rep() * den;
        if (rat_den(scaled) != 1) {
          solved = false;
          break;
        }
        Int cj = rat_num(scaled);
        if (2 * cj > den) cj -= den;
        cvec[j] = cj;
      }
      if (!solved) {
        bad = "generator " + std::to_string(k) + ": probe values not of the form e[c/" + show(den) + "]";
        break;
      }
      VecQ lam_q = to_q(cvec) - lat.j_flat(x);
      if (!is_integral(lam_q)) {
        bad = "generator " + std::to_string(k) + ": recovered functional not integral";
        break;
      }
      VecZ lam = to_z(lam_q);
      if (lam != -lat.i_sharp(VecZ::unit(r, k))) {
        bad = "generator " + std::to_string(k) + ": lam=" + show(lam);
        break;
      }
      CentreElt via_bnd = zc.bnd(alpha).as<CentreElt>();
      if (!(via_bnd == CentreElt{x, lam})) {
        bad = "generator " + std::to_string(k) + ": boundary disagrees";
        break;
      }
    }
    rep.add(bad.empty() ? pass_result(id, static_cast<int>(r))
                        : fail_result(id, static_cast<int>(r), bad));
  }

  {
    std::string id = "centre." + lat.name + ".crossed_hom";
    Rng rng(derive_seed(seed, id));
    CheckResult res = pass_result(id, trials);
    for (int t = 0; t < trials; ++t) {
      CentreElt c = zc.base.sample(rng).as<CentreElt>();
      CheckResult one =
          cross_law_check(theta, centre_cross(theta, lat, c),
                          derive_seed(seed, id + show(c.x)), 4, id);
      if (one.status == Status::Fail) {
        res = fail_result(id, t + 1, "centre element " + show(c));
        break;
      }
    }
    rep.add(res);
  }

  {
    std::string id = "centre." + lat.name + ".delta_is_ad0";
    Rng rng(derive_seed(seed, id));
    CheckResult res = pass_result(id, trials);
    for (int t = 0; t < trials; ++t) {
      CentreElt c = zc.base.sample(rng).as<CentreElt>();
      StrictMor delta = cross_delta(theta, centre_cross(theta, lat, c));
      StrictMor conj = ad0(theta, theta.base.inv(Elt::of<VecQ>(c.x)));
      Elt y = theta.base.sample(rng);
      Elt a = theta.fiber.sample(rng);
      if (!theta.base.eq(delta.p0(y), conj.p0(y)) ||
          !theta.fiber.eq(delta.p1(a), conj.p1(a))) {
        res = fail_result(id, t + 1, "centre element " + show(c));
        break;
      }
    }
    rep.add(res);
  }

  rep.merge(centraliser_of_identity_check(lat, seed, trials));
  return rep;
}

XMod make_centraliser(const std::string& name, const StrictMor& f,
                      std::function<CentrElt(Rng&)> sample,
                      std::vector<Elt> probes) {
  XMod tgt = f.tgt;

  Group base;
  base.name = name + ".base";
  base.id = Elt::of<CentrElt>(
      CentrElt{tgt.base.id, [tgt](const Elt&) { return tgt.fiber.id; }});
  base.mul = [tgt](const Elt& a, const Elt& b) {
    const auto& u = a.as<CentrElt>();
    const auto& v = b.as<CentrElt>();
    auto uchi = u.chi;
    auto vchi = v.chi;
    Elt k = v.h;
    return Elt::of<CentrElt>(
        CentrElt{tgt.base.mul(u.h, v.h), [tgt, uchi, vchi, k](const Elt& s) {
                   return tgt.fiber.mul(vchi(s), tgt.act(uchi(s), k));
                 }});
  };
  base.inv = [tgt](const Elt& a) {
    const auto& u = a.as<CentrElt>();
    auto uchi = u.chi;
    Elt hi = tgt.base.inv(u.h);
    return Elt::of<CentrElt>(CentrElt{hi, [tgt, uchi, hi](const Elt& s) {
                                        return tgt.fiber.inv(
                                            tgt.act(uchi(s), hi));
                                      }});
  };
  base.eq = [tgt, probes](const Elt& a, const Elt& b) {
    const auto& u = a.as<CentrElt>();
    const auto& v = b.as<CentrElt>();
    if (!tgt.base.eq(u.h, v.h)) return false;
    for (const Elt& p : probes)
      if (!tgt.fiber.eq(u.chi(p), v.chi(p))) return false;
    return true;
  };
  base.sample = [sample](Rng& rng) { return Elt::of<CentrElt>(sample(rng)); };
  base.show = [tgt, probes](const Elt& a) {
    const auto& u = a.as<CentrElt>();
    std::ostringstream os;
    os << "(h=" << tgt.base.show(u.h);
    if (!probes.empty())
      os << ", chi(p0)=" << tgt.fiber.show(u.chi(probes.front()));
    os << ")";
    return os.str();
  };

  XMod xm;
  xm.name = name;
  xm.base = base;
  xm.fiber = tgt.fiber;
  xm.act = [tgt](const Elt& z, const Elt& m) {
    return tgt.act(z, m.as<CentrElt>().h);
  };
  StrictMor fc = f;
  xm.bnd = [tgt, fc](const Elt& z) {
    return Elt::of<CentrElt>(
        CentrElt{tgt.bnd(z), [tgt, fc, z](const Elt& s) {
                   return tgt.fiber.mul(tgt.fiber.inv(tgt.act(z, fc.p0(s))),
                                        z);
                 }});
  };
  return xm;
}

Report centraliser_member_check(const StrictMor& f, const CentrElt& m,
                                std::uint64_t seed, int trials,
                                const std::string& id_prefix) {
  Report rep;
  const XMod& src = f.src;
  const XMod& tgt = f.tgt;

  {
    std::string id = id_prefix + ".bnd_chi";
    Rng rng(derive_seed(seed, id));
    CheckResult res = pass_result(id, trials);
    for (int t = 0; t < trials; ++t) {
      Elt s = src.base.sample(rng);
      Elt x = f.p0(s);
      Elt lhs = tgt.bnd(m.chi(s));
      Elt rhs = tgt.base.mul(
          tgt.base.mul(tgt.base.inv(x), tgt.base.inv(m.h)),
          tgt.base.mul(x, m.h));
      if (!tgt.base.eq(lhs, rhs)) {
        res = fail_result(id, t + 1, "s=" + src.base.show(s));
        break;
      }
    }
    rep.add(res);
  }

  {
    std::string id = id_prefix + ".chi_bnd";
    Rng rng(derive_seed(seed, id));
    CheckResult res = pass_result(id, trials);
    for (int t = 0; t < trials; ++t) {
      Elt a = src.fiber.sample(rng);
      Elt fa = f.p1(a);
      Elt lhs = m.chi(src.bnd(a));
      Elt rhs = tgt.fiber.mul(tgt.fiber.inv(fa), tgt.act(fa, m.h));
      if (!tgt.fiber.eq(lhs, rhs)) {
        res = fail_result(id, t + 1, "a=" + src.fiber.show(a));
        break;
      }
    }
    rep.add(res);
  }

  {
    std::string id = id_prefix + ".chi_mul";
    Rng rng(derive_seed(seed, id));
    CheckResult res = pass_result(id, trials);
    for (int t = 0; t < trials; ++t) {
      Elt s = src.base.sample(rng);
      Elt u = src.base.sample(rng);
      Elt lhs = m.chi(src.base.mul(s, u));
      Elt rhs = tgt.fiber.mul(tgt.act(m.chi(s), f.p0(u)), m.chi(u));
      if (!tgt.fiber.eq(lhs, rhs)) {
        res = fail_result(id, t + 1,
                          "s=" + src.base.show(s) + " t=" + src.base.show(u));
        break;
      }
    }
    rep.add(res);
  }

  return rep;
}

CentrElt centre_image(const StrictMor& f, const Elt& s, const Cross& xi) {
  StrictMor fc = f;
  return CentrElt{f.p0(s),
                  [fc, xi](const Elt& y) { return fc.p1(xi(y)); }};
}

Report centraliser_of_identity_check(const Lattice& lat, std::uint64_t seed,
                                     int trials) {
  Report rep;
  XMod theta = make_theta(lat);
  XMod zc = centre_theta(lat);

  StrictMor idmor;
  idmor.src = theta;
  idmor.tgt = theta;
  idmor.p0 = [](const Elt& x) { return x; };
  idmor.p1 = [](const Elt& a) { return a; };

  auto image = [&](const CentreElt& c) {
    return centre_image(idmor, Elt::of<VecQ>(c.x),
                        centre_cross(theta, lat, c));
  };

  {
    std::string id = "centre." + lat.name + ".c_id_membership";
    Rng rng(derive_seed(seed, id));
    CheckResult res = pass_result(id, trials);
    for (int t = 0; t < trials; ++t) {
      CentreElt c = zc.base.sample(rng).as<CentreElt>();
      Report inner = centraliser_member_check(
          idmor, image(c), derive_seed(seed, id + show(c)), 4, id);
      if (!inner.ok()) {
        res = fail_result(id, t + 1, "centre element " + show(c));
        break;
      }
    }
    rep.add(res);
  }

  {
    std::string id = "centre." + lat.name + ".c_id_hom";
    Rng rng(derive_seed(seed, id));
    CheckResult res = pass_result(id, trials);
    for (int t = 0; t < trials; ++t) {
      CentreElt c1 = zc.base.sample(rng).as<CentreElt>();
      CentreElt c2 = zc.base.sample(rng).as<CentreElt>();
      CentreElt c12 = zc.base.mul(Elt::of<CentreElt>(c1), Elt::of<CentreElt>(c2))
                          .as<CentreElt>();
      CentrElt a = image(c1);
      CentrElt b = image(c2);
      CentrElt ab = image(c12);
      Elt s = theta.base.sample(rng);
      Elt lhs = ab.chi(s);
      Elt rhs = theta.fiber.mul(b.chi(s), theta.act(a.chi(s), b.h));
      if (!theta.base.eq(ab.h, theta.base.mul(a.h, b.h)) ||
          !theta.fiber.eq(lhs, rhs)) {
        res = fail_result(id, t + 1, show(c1) + " * " + show(c2));
        break;
      }
    }
    rep.add(res);
  }

  return rep;
}

}  // namespace cattorus
