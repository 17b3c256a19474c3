#include "cattorus/inertia.hpp"

#include <sstream>

#include "cattorus/rng.hpp"

namespace cattorus {

namespace {

WinZ sample_win_z(Rng& rng, std::size_t rank, long long bound = 2) {
  WinZ out = WinZ::constant(kWinRadius, VecZ::zero(rank));
  for (int a = -kWinRadius; a <= kWinRadius; ++a)
    out.at(a) = rng.vec_z(rank, bound);
  return out;
}

WinU sample_win_u(Rng& rng) {
  WinU out = WinU::constant(kWinRadius, CircleElt());
  for (int a = -kWinRadius; a <= kWinRadius; ++a) out.at(a) = rng.circle(12);
  return out;
}

FullObj sample_obj(Rng& rng, const Lattice& lat) {
  std::size_t r = lat.rank();
  WinZ g = sample_win_z(rng, r);
  g.at(1) = VecZ::zero(r);
  WinU c = sample_win_u(rng);
  c.at(1) = CircleElt();
  return FullObj{rng.vec_q(r, 2, 12), Gen2<VecZ>{g}, Gen2<CircleElt>{c}};
}

FullArrow sample_arrow_from(Rng& rng, const Lattice& lat, const FullObj& src) {
  std::size_t r = lat.rank();
  return FullArrow{src, rng.vec_q(r, 2, 12), sample_win_z(rng, r),
                   sample_win_u(rng)};
}

bool arrows_eq(const FullArrow& a, const FullArrow& b) {
  return a.src == b.src && a.y == b.y && a.mu == b.mu && a.w == b.w;
}

FullObj trivial_obj(const VecQ& x, std::size_t rank) {
  return FullObj{x, Gen2<VecZ>{WinZ::constant(kWinRadius, VecZ::zero(rank))},
                 Gen2<CircleElt>{WinU::constant(kWinRadius, CircleElt())}};
}

// The arrow from (x0, 0, 1) to P with invariants (y, z); P.x - x0 must
// lie in the coweight lattice. mu(a) = lambda_P(a) + a*m and
// dw(a,b) = c_P(a,b) - ab*[J(m, x0)], pinned by w(1) = z.
FullArrow connect(const Lattice& lat, const VecQ& x0, const FullObj& P,
                  const VecQ& y, const CircleElt& z) {
  VecZ m = to_z(P.x - x0);
  int radius = P.gamma.gen.r;
  WinZ mu = P.gamma.gen;
  for (int a = -radius; a <= radius; ++a)
    mu.at(a) = mu.at(a) + m.scaled(Int(a));
  Rational th = lat.j_pair(to_q(m), x0);
  auto cw = [&P, &th](long long a, long long b) {
    return P.c.at(a, b) - CircleElt(th * Rational(a * b));
  };
  WinU w = cochain_from_boundary<CircleElt>(cw, z, radius);
  return FullArrow{trivial_obj(x0, x0.size()), y, mu, w};
}

}  // namespace

FullObj full_target(const Lattice& lat, const FullArrow& a) {
  std::size_t rank = lat.rank();
  int radius = a.mu.r;
  VecZ m = a.mu.at(1);
  auto gp = [&a](long long s, long long t) {
    return a.src.gamma.at(s, t) + d1(a.mu, s, t);
  };
  Gen2<VecZ> gamma{
      cochain_from_boundary<VecZ>(gp, VecZ::zero(rank), radius)};
  Rational th = lat.j_pair(to_q(m), a.src.x);
  auto cp = [&a, &th](long long s, long long t) {
    return a.src.c.at(s, t) + d1(a.w, s, t) +
           CircleElt(th * Rational(s * t));
  };
  Gen2<CircleElt> c{cochain_from_boundary<CircleElt>(cp, CircleElt(), radius)};
  return FullObj{a.src.x + to_q(m), gamma, c};
}

FullArrow full_compose(const Lattice& lat, const FullArrow& a,
                       const FullArrow& b) {
  if (!(b.src == full_target(lat, a)))
    throw std::invalid_argument("full_compose: arrows not composable");
  return FullArrow{a.src, a.y + b.y, win_add(a.mu, b.mu), win_add(a.w, b.w)};
}

FullArrow two_arrow_shift(const Lattice& lat, const FullArrow& a,
                          const VecZ& n) {
  Rational ip = lat.i_pair(a.src.x, to_q(n));
  FullArrow out = a;
  out.y = a.y + to_q(n);
  for (int s = -a.w.r; s <= a.w.r; ++s)
    out.w.at(s) = a.w.at(s) + CircleElt(ip * Rational(s));
  return out;
}

Inertia1Arrow compose_1arrows(const Inertia1Arrow& a, const Inertia1Arrow& b) {
  if (!(b.x == a.x + to_q(a.m)))
    throw std::invalid_argument("compose_1arrows: non-composable");
  return Inertia1Arrow{a.x, a.y + b.y, a.m + b.m, a.w + b.w};
}

Inertia1Arrow two_arrow_target(const Lattice& lat, const Inertia2Arrow& s) {
  CircleElt shift(lat.i_pair(s.a.x, to_q(s.n)));
  return Inertia1Arrow{s.a.x, s.a.y + to_q(s.n), s.a.m, s.a.w + shift};
}

Strictification strictify(const Lattice& lat, const FullObj& obj,
                          const VecQ& y, const CircleElt& z) {
  std::size_t rank = lat.rank();
  VecQ yy = y.size() == rank ? y : VecQ::zero(rank);
  FullArrow arrow = connect(lat, obj.x, obj, yy, z);
  WinU beta = arrow.w;
  for (int a = -beta.r; a <= beta.r; ++a) {
    VecQ xa = obj.x.scaled(Rational(a)) + to_q(obj.gamma.gen.at(a));
    beta.at(a) = beta.at(a) - CircleElt(lat.j_pair(xa, yy));
  }
  return Strictification{InertiaObj{obj.x},
                         Inertia1Arrow{obj.x, yy, VecZ::zero(rank), z}, arrow,
                         beta};
}

ArrowClassI class_i(const Lattice& lat, const VecQ& x_lift, const VecQ& y,
                    const CircleElt& w) {
  VecQ t = q_frac(x_lift);
  VecQ n = y - q_frac(y);
  return ArrowClassI{t, q_frac(y), w - CircleElt(lat.i_pair(t, n))};
}

ArrowClassII class_ii(const Lattice& lat, const VecQ& x, const VecQ& s_lift,
                      const CircleElt& z) {
  VecQ s = q_frac(s_lift);
  VecQ m = x - q_frac(x);
  return ArrowClassII{q_frac(x), s, z + CircleElt(lat.i_pair(m, s))};
}

ArrowClassI compose_i(const Lattice& lat, const ArrowClassI& a,
                      const ArrowClassI& b) {
  if (!(a.t == b.t)) throw std::invalid_argument("compose_i: distinct objects");
  return class_i(lat, a.t, a.y + b.y, a.w + b.w);
}

ArrowClassII compose_ii(const Lattice& lat, const ArrowClassII& a,
                        const ArrowClassII& b) {
  if (!(a.x == b.x))
    throw std::invalid_argument("compose_ii: distinct objects");
  return class_ii(lat, a.x, a.s + b.s, a.z + b.z);
}

ArrowClassII presentation_iso(const Lattice& lat, const ArrowClassI& a) {
  return class_ii(lat, a.t, a.y, a.w - CircleElt(lat.i_pair(a.t, a.y)));
}

std::string show(const HElt& h) {
  return "(" + show(h.s) + ", " + show(h.z) + ", " + show(h.m) + ")";
}

Group make_H(const Lattice& lat) {
  std::size_t r = lat.rank();
  Lattice l = lat;
  Group g;
  g.name = lat.name + ".H";
  g.id = Elt::of(HElt{VecQ::zero(r), CircleElt(), VecZ::zero(r)});
  g.mul = [l](const Elt& a, const Elt& b) {
    const HElt& u = a.as<HElt>();
    const HElt& v = b.as<HElt>();
    CircleElt tw(dot(to_q(l.i_sharp(u.m)), v.s));
    return Elt::of(HElt{q_frac(u.s + v.s), u.z + v.z - tw, u.m + v.m});
  };
  g.inv = [l](const Elt& a) {
    const HElt& u = a.as<HElt>();
    CircleElt tw(dot(to_q(l.i_sharp(u.m)), u.s));
    return Elt::of(HElt{q_frac(-u.s), -u.z - tw, -u.m});
  };
  g.eq = [](const Elt& a, const Elt& b) { return a.as<HElt>() == b.as<HElt>(); };
  g.sample = [r](Rng& rng) {
    return Elt::of(
        HElt{q_frac(rng.vec_q(r, 2, 12)), rng.circle(), rng.vec_z(r, 3)});
  };
  g.show = [](const Elt& a) { return show(a.as<HElt>()); };
  return g;
}

TrivChange trivialization_change(const Lattice& lat, const VecZ& m) {
  return TrivChange{lat.i_sharp(m)};
}

std::pair<VecQ, CircleElt> triv_apply(const TrivChange& ch, const VecQ& t,
                                      const CircleElt& u) {
  return {t, u - CircleElt(dot(to_q(ch.shear), t))};
}

Report cochain_lemma_check(const Lattice& lat, std::uint64_t seed,
                           int trials) {
  std::string p = "inertia." + lat.name;
  std::size_t r = lat.rank();
  Report out;

  {
    std::string id = p + ".cochain_unique_z";
    Rng rng(derive_seed(seed, id));
    CheckResult res = pass_result(id, trials);
    for (int t = 0; t < trials; ++t) {
      WinZ mu = sample_win_z(rng, r);
      auto bd = [&mu](long long a, long long b) { return d1(mu, a, b); };
      if (!(cochain_from_boundary<VecZ>(bd, mu.at(1), kWinRadius) == mu)) {
        res = fail_result(id, t + 1, "window not reproduced");
        break;
      }
    }
    out.add(res);
  }

  {
    std::string id = p + ".cochain_unique_u";
    Rng rng(derive_seed(seed, id));
    CheckResult res = pass_result(id, trials);
    for (int t = 0; t < trials; ++t) {
      WinU w = sample_win_u(rng);
      auto bd = [&w](long long a, long long b) { return d1(w, a, b); };
      if (!(cochain_from_boundary<CircleElt>(bd, w.at(1), kWinRadius) == w)) {
        res = fail_result(id, t + 1, "window not reproduced");
        break;
      }
    }
    out.add(res);
  }

  {
    // gamma(a,0) = gamma(0,0) = gamma(0,a), and normalization returns
    // the original generating cochain.
    std::string id = p + ".cocycle_normal_form";
    Rng rng(derive_seed(seed, id));
    CheckResult res = pass_result(id, trials);
    for (int t = 0; t < trials && res.status == Status::Pass; ++t) {
      WinZ gen = sample_win_z(rng, r);
      gen.at(1) = VecZ::zero(r);
      Gen2<VecZ> gamma{gen};
      auto f = [&gamma](long long a, long long b) { return gamma.at(a, b); };
      long long a = rng.int_in(-kInertiaWindow, kInertiaWindow);
      if (!(gamma.at(a, 0) == gamma.at(0, 0)) ||
          !(gamma.at(0, a) == gamma.at(0, 0)))
        res = fail_result(id, t + 1, "degenerate values differ");
      else if (!(cocycle_normalize<VecZ>(f, VecZ::zero(r), kWinRadius).gen ==
                 gen))
        res = fail_result(id, t + 1, "generating cochain not recovered");
    }
    out.add(res);
  }

  {
    // A corrupted window must be rejected.
    std::string id = p + ".cocycle_reject";
    Rng rng(derive_seed(seed, id));
    CheckResult res = pass_result(id, trials);
    for (int t = 0; t < trials; ++t) {
      WinZ gen = sample_win_z(rng, r);
      gen.at(1) = VecZ::zero(r);
      Gen2<VecZ> gamma{gen};
      long long a0 = rng.int_in(-kInertiaWindow, kInertiaWindow);
      long long b0 = rng.int_in(2, kInertiaWindow);
      VecZ bump = VecZ::zero(r);
      bump[0] = Int(1);
      auto f = [&gamma, a0, b0, &bump](long long a, long long b) {
        VecZ val = gamma.at(a, b);
        if (a == a0 && b == b0) val = val + bump;
        return val;
      };
      bool rejected = false;
      try {
        cocycle_normalize<VecZ>(f, VecZ::zero(r), kWinRadius);
      } catch (const std::invalid_argument&) {
        rejected = true;
      }
      if (!rejected) {
        res = fail_result(id, t + 1, "corruption accepted");
        break;
      }
    }
    out.add(res);
  }

  return out;
}

Report full_model_check(const Lattice& lat, std::uint64_t seed, int trials) {
  std::string p = "inertia." + lat.name;
  std::size_t r = lat.rank();
  Report out;

  {
    // Target of a composite equals the target of its second leg; the
    // discrepancy J(mu'(1), mu(1)) is integral, so this holds exactly.
    std::string id = p + ".full_target_coherent";
    Rng rng(derive_seed(seed, id));
    CheckResult res = pass_result(id, trials);
    for (int t = 0; t < trials; ++t) {
      FullArrow a = sample_arrow_from(rng, lat, sample_obj(rng, lat));
      FullArrow b = sample_arrow_from(rng, lat, full_target(lat, a));
      if (!(full_target(lat, full_compose(lat, a, b)) ==
            full_target(lat, b))) {
        res = fail_result(id, t + 1, "composite lands elsewhere");
        break;
      }
    }
    out.add(res);
  }

  {
    std::string id = p + ".full_assoc";
    Rng rng(derive_seed(seed, id));
    CheckResult res = pass_result(id, trials);
    for (int t = 0; t < trials; ++t) {
      FullArrow a = sample_arrow_from(rng, lat, sample_obj(rng, lat));
      FullArrow b = sample_arrow_from(rng, lat, full_target(lat, a));
      FullArrow c = sample_arrow_from(rng, lat, full_target(lat, b));
      FullArrow lhs = full_compose(lat, full_compose(lat, a, b), c);
      FullArrow rhs = full_compose(lat, a, full_compose(lat, b, c));
      if (!arrows_eq(lhs, rhs)) {
        res = fail_result(id, t + 1, "association brackets differ");
        break;
      }
    }
    out.add(res);
  }

  {
    // Re-hanging an arrow along a 2-arrow keeps its target: dw absorbs
    // the linear shift a*[I(x,n)].
    std::string id = p + ".two_arrow_transport";
    Rng rng(derive_seed(seed, id));
    CheckResult res = pass_result(id, trials);
    for (int t = 0; t < trials; ++t) {
      FullArrow a = sample_arrow_from(rng, lat, sample_obj(rng, lat));
      VecZ n = rng.vec_z(r, 3);
      if (!(full_target(lat, two_arrow_shift(lat, a, n)) ==
            full_target(lat, a))) {
        res = fail_result(id, t + 1, "n=" + show(n));
        break;
      }
    }
    out.add(res);
  }

  {
    // Small-model whiskering: shifting both legs by 2-arrows matches a
    // single shift of the composite, up to the integer I(m, n').
    std::string id = p + ".small_whisker";
    Rng rng(derive_seed(seed, id));
    CheckResult res = pass_result(id, trials);
    for (int t = 0; t < trials; ++t) {
      VecQ x = rng.vec_q(r, 2, 12);
      Inertia1Arrow a{x, rng.vec_q(r, 2, 12), rng.vec_z(r, 3), rng.circle()};
      Inertia1Arrow b{x + to_q(a.m), rng.vec_q(r, 2, 12), rng.vec_z(r, 3),
                      rng.circle()};
      VecZ n = rng.vec_z(r, 3);
      VecZ np = rng.vec_z(r, 3);
      Inertia1Arrow lhs =
          compose_1arrows(two_arrow_target(lat, Inertia2Arrow{a, n, {}}),
                          two_arrow_target(lat, Inertia2Arrow{b, np, {}}));
      Inertia1Arrow rhs =
          two_arrow_target(lat, Inertia2Arrow{compose_1arrows(a, b), n + np, {}});
      if (!(lhs == rhs)) {
        res = fail_result(id, t + 1, "whiskers disagree");
        break;
      }
    }
    out.add(res);
  }

  return out;
}

Report strictification_check(const Lattice& lat, std::uint64_t seed,
                             int trials) {
  std::string p = "inertia." + lat.name;
  std::size_t r = lat.rank();
  Report out;

  {
    std::string id = p + ".strictify_target";
    Rng rng(derive_seed(seed, id));
    CheckResult res = pass_result(id, trials);
    for (int t = 0; t < trials; ++t) {
      FullObj P = sample_obj(rng, lat);
      Strictification s = strictify(lat, P, rng.vec_q(r, 2, 12), rng.circle());
      if (!(full_target(lat, s.arrow) == P)) {
        res = fail_result(id, t + 1, "arrow misses its object");
        break;
      }
    }
    out.add(res);
  }

  {
    // With y = 0 the component labels are the w-cochain itself; the
    // trivial object strictifies to the identity arrow.
    std::string id = p + ".strictify_labels";
    Rng rng(derive_seed(seed, id));
    CheckResult res = pass_result(id, trials);
    for (int t = 0; t < trials && res.status == Status::Pass; ++t) {
      FullObj P = sample_obj(rng, lat);
      Strictification s0 = strictify(lat, P, VecQ::zero(r), rng.circle());
      if (!(s0.beta == s0.arrow.w)) {
        res = fail_result(id, t + 1, "labels twisted at y=0");
        continue;
      }
      FullObj triv = trivial_obj(rng.vec_q(r, 2, 12), r);
      Strictification si = strictify(lat, triv);
      bool idarrow = si.arrow.mu == WinZ::constant(kWinRadius, VecZ::zero(r)) &&
                     si.arrow.w == WinU::constant(kWinRadius, CircleElt());
      if (!idarrow)
        res = fail_result(id, t + 1, "trivial object has nontrivial arrow");
    }
    out.add(res);
  }

  {
    // Post-composition with the strictification arrow matches hom-sets
    // bijectively: both sides are parametrized by the free pair (y, z).
    std::string id = p + ".strictify_homsets";
    Rng rng(derive_seed(seed, id));
    CheckResult res = pass_result(id, trials);
    for (int t = 0; t < trials; ++t) {
      VecQ x0 = rng.vec_q(r, 2, 12);
      FullObj P = sample_obj(rng, lat);
      P.x = x0 + to_q(rng.vec_z(r, 2));
      Strictification s = strictify(lat, P, rng.vec_q(r, 2, 12), rng.circle());
      VecQ Y = rng.vec_q(r, 2, 12);
      CircleElt Z = rng.circle();
      FullArrow direct = connect(lat, x0, P, Y, Z);
      FullArrow through = connect(lat, x0, trivial_obj(P.x, r),
                                  Y - s.arrow.y, Z - s.arrow.w.at(1));
      if (!arrows_eq(full_compose(lat, through, s.arrow), direct)) {
        res = fail_result(id, t + 1, "factorization mismatch");
        break;
      }
    }
    out.add(res);
  }

  return out;
}

Report presentations_isomorphism(const Lattice& lat, std::uint64_t seed,
                                 int trials) {
  std::string p = "inertia." + lat.name;
  std::size_t r = lat.rank();
  Report out;

  {
    std::string id = p + ".class_i_lifts";
    Rng rng(derive_seed(seed, id));
    CheckResult res = pass_result(id, trials);
    for (int t = 0; t < trials && res.status == Status::Pass; ++t) {
      VecQ xl = rng.vec_q(r, 2, 12);
      VecQ y = rng.vec_q(r, 2, 12);
      CircleElt w = rng.circle();
      VecZ m = rng.vec_z(r, 3);
      VecZ n = rng.vec_z(r, 3);
      if (!(class_i(lat, xl + to_q(m), y, w) == class_i(lat, xl, y, w)))
        res = fail_result(id, t + 1, "x-lift leaks into the class");
      else if (!(class_i(lat, xl, y + to_q(n), w) ==
                 class_i(lat, xl, y, w - CircleElt(lat.i_pair(xl, to_q(n))))))
        res = fail_result(id, t + 1, "relation not collapsed");
      else if (!(class_i(lat, xl, y, w - CircleElt(lat.i_pair(xl, to_q(n)))) ==
                 class_i(lat, xl, y,
                         w - CircleElt(lat.i_pair(xl + to_q(m), to_q(n))))))
        res = fail_result(id, t + 1, "relation phase depends on lift");
    }
    out.add(res);
  }

  {
    std::string id = p + ".class_ii_lifts";
    Rng rng(derive_seed(seed, id));
    CheckResult res = pass_result(id, trials);
    for (int t = 0; t < trials && res.status == Status::Pass; ++t) {
      VecQ x = rng.vec_q(r, 2, 12);
      VecQ sl = rng.vec_q(r, 2, 12);
      CircleElt z = rng.circle();
      VecZ m = rng.vec_z(r, 3);
      VecZ n = rng.vec_z(r, 3);
      if (!(class_ii(lat, x, sl + to_q(n), z) == class_ii(lat, x, sl, z)))
        res = fail_result(id, t + 1, "s-lift leaks into the class");
      else if (!(class_ii(lat, x + to_q(m), sl, z) ==
                 class_ii(lat, x, sl, z + CircleElt(lat.i_pair(to_q(m), sl)))))
        res = fail_result(id, t + 1, "relation not collapsed");
    }
    out.add(res);
  }

  {
    // The proof map (x,y,w) -> (x, exp(y), w - [I(x,y)]) descends: it
    // collapses relation (i) to relation (ii) and ignores the x-lift.
    std::string id = p + ".iso_well_defined";
    Rng rng(derive_seed(seed, id));
    CheckResult res = pass_result(id, trials);
    auto raw = [&lat](const VecQ& xl, const VecQ& y, const CircleElt& w) {
      return class_ii(lat, xl, y, w - CircleElt(lat.i_pair(xl, y)));
    };
    for (int t = 0; t < trials && res.status == Status::Pass; ++t) {
      VecQ xl = rng.vec_q(r, 2, 12);
      VecQ y = rng.vec_q(r, 2, 12);
      CircleElt w = rng.circle();
      VecZ m = rng.vec_z(r, 3);
      VecZ n = rng.vec_z(r, 3);
      if (!(raw(xl, y + to_q(n), w) ==
            raw(xl, y, w - CircleElt(lat.i_pair(xl, to_q(n))))))
        res = fail_result(id, t + 1, "relation (i) not transported");
      else if (!(raw(xl + to_q(m), y, w) == raw(xl, y, w)))
        res = fail_result(id, t + 1, "x-lift changes the image");
      else if (!(raw(xl, y, w) ==
                 presentation_iso(lat, class_i(lat, xl, y, w))))
        res = fail_result(id, t + 1, "canonical forms disagree");
    }
    out.add(res);
  }

  {
    std::string id = p + ".iso_functorial";
    Rng rng(derive_seed(seed, id));
    CheckResult res = pass_result(id, trials);
    for (int t = 0; t < trials; ++t) {
      VecQ xl = rng.vec_q(r, 2, 12);
      ArrowClassI a = class_i(lat, xl, rng.vec_q(r, 2, 12), rng.circle());
      ArrowClassI b = class_i(lat, xl, rng.vec_q(r, 2, 12), rng.circle());
      ArrowClassII lhs = presentation_iso(lat, compose_i(lat, a, b));
      ArrowClassII rhs = compose_ii(lat, presentation_iso(lat, a),
                                    presentation_iso(lat, b));
      if (!(lhs == rhs)) {
        res = fail_result(id, t + 1, "composition not respected");
        break;
      }
    }
    out.add(res);
  }

  return out;
}

Report t_mod_H_equivalence(const Lattice& lat, std::uint64_t seed,
                           int trials) {
  std::string p = "inertia." + lat.name;
  std::size_t r = lat.rank();
  Group H = make_H(lat);
  Report out = group_laws(H, seed, trials);

  {
    std::string id = p + ".H_twist_lift_free";
    Rng rng(derive_seed(seed, id));
    CheckResult res = pass_result(id, trials);
    for (int t = 0; t < trials; ++t) {
      HElt u{q_frac(rng.vec_q(r, 2, 12)), rng.circle(), rng.vec_z(r, 3)};
      HElt v{q_frac(rng.vec_q(r, 2, 12)), rng.circle(), rng.vec_z(r, 3)};
      HElt vs = v;
      vs.s = v.s + to_q(rng.vec_z(r, 3));
      Elt lhs = H.mul(Elt::of(u), Elt::of(v));
      Elt rhs = H.mul(Elt::of(u), Elt::of(vs));
      if (!(lhs.as<HElt>() == rhs.as<HElt>())) {
        res = fail_result(id, t + 1, "twist depends on the lift");
        break;
      }
    }
    out.add(res);
  }

  {
    std::string id = p + ".H_untwisted";
    Rng rng(derive_seed(seed, id));
    CheckResult res = pass_result(id, trials);
    for (int t = 0; t < trials; ++t) {
      HElt u{q_frac(rng.vec_q(r, 2, 12)), rng.circle(), VecZ::zero(r)};
      HElt v{q_frac(rng.vec_q(r, 2, 12)), rng.circle(), VecZ::zero(r)};
      HElt uv = H.mul(Elt::of(u), Elt::of(v)).as<HElt>();
      if (!(uv.z == u.z + v.z)) {
        res = fail_result(id, t + 1, "m=0 subgroup twisted");
        break;
      }
    }
    out.add(res);
  }

  // The functor x -> exp(x), (x, h) -> [x + m, s, z] into presentation
  // (ii); composition follows the left-action order.
  auto functor = [&lat](const VecQ& x, const HElt& h) {
    return class_ii(lat, x + to_q(h.m), h.s, h.z);
  };

  {
    std::string id = p + ".tH_functorial";
    Rng rng(derive_seed(seed, id));
    CheckResult res = pass_result(id, trials);
    for (int t = 0; t < trials && res.status == Status::Pass; ++t) {
      VecQ x = rng.vec_q(r, 2, 12);
      HElt h = H.sample(rng).as<HElt>();
      HElt hp = H.sample(rng).as<HElt>();
      HElt prod = H.mul(Elt::of(hp), Elt::of(h)).as<HElt>();
      ArrowClassII lhs = functor(x, prod);
      ArrowClassII rhs = compose_ii(lat, functor(x + to_q(h.m), hp),
                                    functor(x, h));
      ArrowClassII unit = functor(x, H.id.as<HElt>());
      if (!(lhs == rhs))
        res = fail_result(id, t + 1, "composite classes differ");
      else if (!(unit == ArrowClassII{q_frac(x), VecQ::zero(r), CircleElt()}))
        res = fail_result(id, t + 1, "identity not preserved");
    }
    out.add(res);
  }

  {
    std::string id = p + ".tH_faithful";
    Rng rng(derive_seed(seed, id));
    CheckResult res = pass_result(id, trials);
    for (int t = 0; t < trials; ++t) {
      VecQ x = rng.vec_q(r, 2, 12);
      VecZ m = rng.vec_z(r, 3);
      HElt h1{q_frac(rng.vec_q(r, 2, 12)), rng.circle(), m};
      HElt h2{q_frac(rng.vec_q(r, 2, 12)), rng.circle(), m};
      if (h1 == h2) continue;
      if (functor(x, h1) == functor(x, h2)) {
        res = fail_result(id, t + 1, "distinct arrows identified");
        break;
      }
    }
    out.add(res);
  }

  {
    std::string id = p + ".tH_full";
    Rng rng(derive_seed(seed, id));
    CheckResult res = pass_result(id, trials);
    for (int t = 0; t < trials; ++t) {
      VecQ x = rng.vec_q(r, 2, 12);
      VecZ m = rng.vec_z(r, 3);
      VecQ sl = rng.vec_q(r, 2, 12);
      CircleElt z = rng.circle();
      ArrowClassII cls = class_ii(lat, x + to_q(m), sl, z);
      HElt pre{q_frac(sl), z, m};
      if (!(functor(x, pre) == cls)) {
        res = fail_result(id, t + 1, "class not reached");
        break;
      }
    }
    out.add(res);
  }

  return out;
}

Report trivialization_check(const Lattice& lat, std::uint64_t seed,
                            int trials) {
  std::string p = "inertia." + lat.name;
  std::size_t r = lat.rank();
  Report out;

  {
    std::string id = p + ".triv_change";
    Rng rng(derive_seed(seed, id));
    CheckResult res = pass_result(id, trials);
    for (int t = 0; t < trials && res.status == Status::Pass; ++t) {
      VecQ tt = q_frac(rng.vec_q(r, 2, 12));
      CircleElt u = rng.circle();
      VecZ m = rng.vec_z(r, 3);
      VecZ mp = rng.vec_z(r, 3);
      auto idc = triv_apply(trivialization_change(lat, VecZ::zero(r)), tt, u);
      auto once = triv_apply(trivialization_change(lat, mp), tt, u);
      auto twice =
          triv_apply(trivialization_change(lat, m), once.first, once.second);
      auto joint = triv_apply(trivialization_change(lat, m + mp), tt, u);
      if (!(idc.first == tt && idc.second == u))
        res = fail_result(id, t + 1, "m=0 moves the fiber");
      else if (!(twice == joint))
        res = fail_result(id, t + 1, "changes do not add");
      else {
        TrivChange ch = trivialization_change(lat, m);
        CircleElt a = triv_apply(ch, tt, u).second;
        CircleElt b = triv_apply(ch, tt + to_q(mp), u).second;
        if (!(a == b)) res = fail_result(id, t + 1, "depends on the lift");
      }
    }
    out.add(res);
  }

  {
    // triv_{x+m} = change(m) after triv_x on the classes themselves.
    std::string id = p + ".triv_consistent";
    Rng rng(derive_seed(seed, id));
    CheckResult res = pass_result(id, trials);
    for (int t = 0; t < trials; ++t) {
      VecQ x = rng.vec_q(r, 2, 12);
      VecZ m = rng.vec_z(r, 3);
      VecQ s = q_frac(rng.vec_q(r, 2, 12));
      CircleElt z = rng.circle();
      // The class with representative (x, s, z) re-read at lift x + m.
      CircleElt z_at_xm = z - CircleElt(lat.i_pair(to_q(m), s));
      auto moved = triv_apply(trivialization_change(lat, m), s, z);
      if (!(moved.second == z_at_xm)) {
        res = fail_result(id, t + 1, "fiber coordinates disagree");
        break;
      }
    }
    out.add(res);
  }

  {
    std::string id = p + ".triv_hom";
    Rng rng(derive_seed(seed, id));
    CheckResult res = pass_result(id, trials);
    for (int t = 0; t < trials; ++t) {
      VecZ m = rng.vec_z(r, 3);
      TrivChange ch = trivialization_change(lat, m);
      VecQ t1 = q_frac(rng.vec_q(r, 2, 12));
      VecQ t2 = q_frac(rng.vec_q(r, 2, 12));
      CircleElt u1 = rng.circle();
      CircleElt u2 = rng.circle();
      auto prod = triv_apply(ch, q_frac(t1 + t2), u1 + u2);
      auto f1 = triv_apply(ch, t1, u1);
      auto f2 = triv_apply(ch, t2, u2);
      if (!(prod.first == q_frac(f1.first + f2.first) &&
            prod.second == f1.second + f2.second)) {
        res = fail_result(id, t + 1, "not a homomorphism");
        break;
      }
    }
    out.add(res);
  }

  return out;
}

}  // namespace cattorus
