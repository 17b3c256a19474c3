#include "cattorus/cattorus.hpp"

#include <sstream>

namespace cattorus {

namespace {
int m2(const Int& x) { return mod2(x).convert_to<int>(); }
}  // namespace

std::string show(const FibElt& e) {
  return "(" + show(e.m) + ", " + show(e.z) + ")";
}
std::string show(const TeePm& e) {
  return "(" + show(e.x) + ", " + (e.eps > 0 ? "+1" : "-1") + ")";
}
std::string show(const ExCov& e) {
  return "(" + show(e.m) + ", i" + std::to_string(e.iota) + ")";
}
std::string show(const F2Cov& e) {
  return "(" + show(e.a) + ", i" + std::to_string(e.iota) + ")";
}

Scalar phase_scalar(const Rational& r) {
  return Scalar::from_phase(CircleElt(r));
}

Scalar minus_one_to(const Int& k) {
  return Scalar::from_phase(CircleElt(Rational(k, 2)));
}

Group make_tee(const Lattice& lat) {
  std::size_t r = lat.rank();
  Group g;
  g.name = lat.name + ".tee";
  g.id = Elt::of(VecQ::zero(r));
  g.mul = [](const Elt& a, const Elt& b) {
    return Elt::of(a.as<VecQ>() + b.as<VecQ>());
  };
  g.inv = [](const Elt& a) { return Elt::of(-a.as<VecQ>()); };
  g.eq = [](const Elt& a, const Elt& b) { return a.as<VecQ>() == b.as<VecQ>(); };
  g.sample = [r](Rng& rng) { return Elt::of(rng.vec_q(r)); };
  g.show = [](const Elt& a) { return show(a.as<VecQ>()); };
  return g;
}

Group make_tee_pm(const Lattice& lat) {
  std::size_t r = lat.rank();
  Group g;
  g.name = lat.name + ".tee_pm";
  g.id = Elt::of(TeePm{VecQ::zero(r), 1});
  g.mul = [](const Elt& a, const Elt& b) {
    const TeePm& u = a.as<TeePm>();
    const TeePm& v = b.as<TeePm>();
    VecQ x = u.eps > 0 ? u.x + v.x : u.x - v.x;
    return Elt::of(TeePm{x, u.eps * v.eps});
  };
  g.inv = [](const Elt& a) {
    const TeePm& u = a.as<TeePm>();
    VecQ x = u.eps > 0 ? -u.x : u.x;
    return Elt::of(TeePm{x, u.eps});
  };
  g.eq = [](const Elt& a, const Elt& b) { return a.as<TeePm>() == b.as<TeePm>(); };
  g.sample = [r](Rng& rng) {
    return Elt::of(TeePm{rng.vec_q(r), rng.sign()});
  };
  g.show = [](const Elt& a) { return show(a.as<TeePm>()); };
  return g;
}

Group make_fiber(const Lattice& lat, LabelKind kind) {
  std::size_t r = lat.rank();
  Group g;
  g.name = lat.name + (kind == LabelKind::Circle ? ".fib_u1" : ".fib_cx");
  g.id = Elt::of(FibElt{VecZ::zero(r), Scalar::one()});
  g.mul = [](const Elt& a, const Elt& b) {
    const FibElt& u = a.as<FibElt>();
    const FibElt& v = b.as<FibElt>();
    return Elt::of(FibElt{u.m + v.m, u.z * v.z});
  };
  g.inv = [](const Elt& a) {
    const FibElt& u = a.as<FibElt>();
    return Elt::of(FibElt{-u.m, u.z.inv()});
  };
  g.eq = [](const Elt& a, const Elt& b) { return a.as<FibElt>() == b.as<FibElt>(); };
  g.sample = [r, kind](Rng& rng) {
    Scalar z = kind == LabelKind::Circle
                   ? Scalar::from_phase(rng.circle())
                   : Scalar(Rational(rng.int_in(1, 8), rng.int_in(1, 8)),
                            rng.circle());
    return Elt::of(FibElt{rng.vec_z(r), z});
  };
  g.show = [](const Elt& a) { return show(a.as<FibElt>()); };
  return g;
}

Group make_excov(const Lattice& lat) {
  std::size_t r = lat.rank();
  Lattice l = lat;
  Group g;
  g.name = lat.name + ".excov";
  g.id = Elt::of(ExCov{VecZ::zero(r), 0});
  g.mul = [l](const Elt& a, const Elt& b) {
    const ExCov& u = a.as<ExCov>();
    const ExCov& v = b.as<ExCov>();
    int iota = (u.iota + v.iota + m2(l.j_pair(v.m, u.m))) % 2;
    return Elt::of(ExCov{u.m + v.m, iota});
  };
  g.inv = [l](const Elt& a) {
    const ExCov& u = a.as<ExCov>();
    return Elt::of(ExCov{-u.m, (u.iota + m2(l.j_pair(u.m, u.m))) % 2});
  };
  g.eq = [](const Elt& a, const Elt& b) { return a.as<ExCov>() == b.as<ExCov>(); };
  g.sample = [r](Rng& rng) {
    return Elt::of(ExCov{rng.vec_z(r), rng.bit()});
  };
  g.show = [](const Elt& a) { return show(a.as<ExCov>()); };
  return g;
}

Group make_t2_cover(const Lattice& lat) {
  std::size_t r = lat.rank();
  Lattice l = lat;
  Group g;
  g.name = lat.name + ".t2_cover";
  g.id = Elt::of(F2Cov{VecZ::zero(r), 0});
  g.mul = [l](const Elt& a, const Elt& b) {
    const F2Cov& u = a.as<F2Cov>();
    const F2Cov& v = b.as<F2Cov>();
    int iota = (u.iota + v.iota + m2(l.j_pair(v.a, u.a))) % 2;
    return Elt::of(F2Cov{vec_mod2(u.a + v.a), iota});
  };
  g.inv = [l](const Elt& a) {
    const F2Cov& u = a.as<F2Cov>();
    return Elt::of(F2Cov{u.a, (u.iota + m2(l.j_pair(u.a, u.a))) % 2});
  };
  g.eq = [](const Elt& a, const Elt& b) { return a.as<F2Cov>() == b.as<F2Cov>(); };
  g.sample = [r](Rng& rng) {
    VecZ a(r);
    for (std::size_t k = 0; k < r; ++k) a[k] = rng.bit();
    return Elt::of(F2Cov{a, rng.bit()});
  };
  g.show = [](const Elt& a) { return show(a.as<F2Cov>()); };
  return g;
}

XMod make_theta(const Lattice& lat, LabelKind kind) {
  Lattice l = lat;
  XMod xm;
  xm.name = lat.name + ".theta";
  xm.base = make_tee(lat);
  xm.fiber = make_fiber(lat, kind);
  xm.act = [l](const Elt& a, const Elt& x) {
    const FibElt& u = a.as<FibElt>();
    Rational tw = l.j_pair(to_q(u.m), x.as<VecQ>());
    return Elt::of(FibElt{u.m, u.z * phase_scalar(tw)});
  };
  xm.bnd = [](const Elt& a) { return Elt::of(to_q(a.as<FibElt>().m)); };
  return xm;
}

XMod make_theta_prime(const Lattice& lat, LabelKind kind) {
  Lattice l = lat;
  XMod xm;
  xm.name = lat.name + ".theta_pm";
  xm.base = make_tee_pm(lat);
  xm.fiber = make_fiber(lat, kind);
  xm.act = [l](const Elt& a, const Elt& x) {
    const FibElt& u = a.as<FibElt>();
    const TeePm& t = x.as<TeePm>();
    Rational tw = l.j_pair(to_q(u.m), t.x);
    VecZ m = t.eps > 0 ? u.m : -u.m;
    return Elt::of(FibElt{m, u.z * phase_scalar(tw)});
  };
  xm.bnd = [](const Elt& a) {
    return Elt::of(TeePm{to_q(a.as<FibElt>().m), 1});
  };
  return xm;
}

XMod make_extraspecial(const Lattice& lat) {
  Lattice l = lat;
  XMod xm;
  xm.name = lat.name + ".esx";
  xm.base = make_excov(lat);
  xm.fiber = make_fiber(lat, LabelKind::Cx);
  xm.act = [l](const Elt& a, const Elt& x) {
    const FibElt& u = a.as<FibElt>();
    const ExCov& n = x.as<ExCov>();
    return Elt::of(FibElt{u.m, u.z * minus_one_to(l.j_pair(n.m, u.m))});
  };
  xm.bnd = [](const Elt& a) {
    return Elt::of(ExCov{a.as<FibElt>().m.scaled(Int(2)), 0});
  };
  return xm;
}

std::vector<VecQ> two_torsion(const Lattice& lat) {
  std::size_t r = lat.rank();
  std::vector<VecQ> out;
  for (const VecZ& bits : f2_vectors(r)) {
    VecQ t(r);
    for (std::size_t k = 0; k < r; ++k) t[k] = Rational(bits[k], 2);
    out.push_back(t);
  }
  return out;
}

ExtraspecialData extraspecial_group(const Lattice& lat) {
  std::size_t r = lat.rank();
  Lattice l = lat;
  auto mul = [&l](const F2Cov& u, const F2Cov& v) {
    return F2Cov{vec_mod2(u.a + v.a),
                 (u.iota + v.iota + m2(l.j_pair(v.a, u.a))) % 2};
  };
  auto invert = [&l](const F2Cov& u) {
    return F2Cov{u.a, (u.iota + m2(l.j_pair(u.a, u.a))) % 2};
  };

  ExtraspecialData data;
  for (const VecZ& a : f2_vectors(r))
    for (int iota = 0; iota < 2; ++iota) data.elements.push_back({a, iota});

  for (const F2Cov& z : data.elements) {
    bool central = true;
    for (const F2Cov& g : data.elements)
      if (!(mul(z, g) == mul(g, z))) {
        central = false;
        break;
      }
    if (central) data.centre.push_back(z);
  }

  // commutators generate; close under multiplication
  std::vector<F2Cov> comm;
  auto push_unique = [&comm](const F2Cov& c) {
    for (const F2Cov& u : comm)
      if (u == c) return;
    comm.push_back(c);
  };
  for (const F2Cov& g : data.elements)
    for (const F2Cov& h : data.elements)
      push_unique(mul(mul(invert(g), invert(h)), mul(g, h)));
  bool grew = true;
  while (grew) {
    grew = false;
    std::size_t n = comm.size();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        F2Cov c = mul(comm[i], comm[j]);
        std::size_t before = comm.size();
        push_unique(c);
        if (comm.size() != before) grew = true;
      }
  }
  data.commutator_subgroup = comm;

  std::ostringstream pres;
  pres << "order " << data.elements.size() << "\n";
  pres << "generators";
  for (std::size_t k = 0; k < r; ++k) pres << " e" << (k + 1);
  pres << " z\n";
  pres << "relations z^2 = 1, z central";
  for (std::size_t k = 0; k < r; ++k) {
    VecZ ek = VecZ::unit(r, k);
    pres << ", e" << (k + 1) << "^2 = z^" << show(mod2(l.j_pair(ek, ek)));
  }
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j) {
      VecZ ei = VecZ::unit(r, i), ej = VecZ::unit(r, j);
      pres << ", [e" << (i + 1) << ",e" << (j + 1) << "] = z^"
           << show(mod2(l.i_pair(ei, ej)));
    }
  pres << "\n";
  data.presentation = pres.str();
  return data;
}

}  // namespace cattorus
