#include "cattorus/autos.hpp"

#include <algorithm>
#include <memory>
#include <set>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "cattorus/cattorus.hpp"

namespace cattorus {

namespace {

int m2(const Int& x) { return static_cast<int>(mod2(x)); }

MatZ diag_of(const VecZ& d) {
  MatZ m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
  return m;
}

VecZ diagonal_of(const MatZ& b) {
  VecZ d(b.rows());
  for (std::size_t i = 0; i < b.rows(); ++i) d[i] = b.at(i, i);
  return d;
}

MatZ strict_lower(const MatZ& c) {
  MatZ r(c.rows(), c.cols());
  for (std::size_t i = 0; i < c.rows(); ++i)
    for (std::size_t j = 0; j < i; ++j) r.at(i, j) = c.at(i, j);
  return r;
}

MatZ inverse_z(const MatZ& f) { return to_z(inverse(f)); }

// the discrepancy J - f*J that a lift of f has to carry
MatZ twist_of(const Lattice& lat, const MatZ& f) {
  return lat.j - form_pullback(f, lat.j);
}

MatZ sample_symmetric(Rng& rng, std::size_t r, long long bound) {
  MatZ s(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i; j < r; ++j) {
      Int v = rng.int_(bound);
      s.at(i, j) = v;
      s.at(j, i) = v;
    }
  return s;
}

// even diagonal, arbitrary (symmetric) off-diagonal part
MatZ sample_even_symmetric(Rng& rng, std::size_t r, long long bound) {
  MatZ s = sample_symmetric(rng, r, bound);
  for (std::size_t i = 0; i < r; ++i) s.at(i, i) = s.at(i, i) * 2;
  return s;
}

using IsoList = std::shared_ptr<const std::vector<MatZ>>;

IsoList shared_isometries(const Lattice& lat) {
  return std::make_shared<const std::vector<MatZ>>(isometry_group(lat));
}

const MatZ& pick(const IsoList& isos, Rng& rng) {
  return (*isos)[static_cast<std::size_t>(
      rng.int_in(0, static_cast<long long>(isos->size()) - 1))];
}

OTildeElt sample_otilde(const Lattice& lat, const IsoList& isos, Rng& rng) {
  const MatZ& f = pick(isos, rng);
  return OTildeElt{f, strict_lower(twist_of(lat, f)) +
                          sample_symmetric(rng, lat.rank(), 2)};
}

LamGam sample_lamgam(const Lattice& lat, Rng& rng) {
  std::size_t r = lat.rank();
  VecZ lam = rng.vec_z(r, 3);
  return LamGam{lam,
                diag_of(vec_mod2(lam)) + sample_even_symmetric(rng, r, 2)};
}

CovGam sample_covgam(const Lattice& lat, Rng& rng) {
  std::size_t r = lat.rank();
  VecZ n = rng.vec_z(r, 3);
  MatZ s = diag_of(vec_mod2(lat.i_sharp(n))) + sample_even_symmetric(rng, r, 2);
  return CovGam{n, rng.bit() ? 1 : 0, s};
}

}  // namespace

MatZ form_pullback(const MatZ& f, const MatZ& b) {
  return f.transposed() * b * f;
}

bool is_symmetric(const MatZ& b) { return b == b.transposed(); }

bool is_even_symmetric(const MatZ& b) {
  if (!is_symmetric(b)) return false;
  for (std::size_t i = 0; i < b.rows(); ++i)
    if (mod2(b.at(i, i)) != 0) return false;
  return true;
}

std::string show(const OTildeElt& u) {
  return "(f=" + show(u.f) + ", b=" + show(u.b) + ")";
}

OTildeElt otilde_make(const Lattice& lat, MatZ f, MatZ b) {
  if (b - b.transposed() != twist_of(lat, f))
    throw std::invalid_argument(
        "otilde_make: b - b^t does not match the twist of f");
  return OTildeElt{std::move(f), std::move(b)};
}

OTildeElt otilde_mul(const Lattice& lat, const OTildeElt& u,
                     const OTildeElt& v) {
  OTildeElt a = otilde_make(lat, u.f, u.b);
  OTildeElt b = otilde_make(lat, v.f, v.b);
  return OTildeElt{a.f * b.f, form_pullback(b.f, a.b) + b.b};
}

OTildeElt otilde_inv(const Lattice& lat, const OTildeElt& u) {
  OTildeElt a = otilde_make(lat, u.f, u.b);
  MatZ fi = inverse_z(a.f);
  return OTildeElt{fi, -form_pullback(fi, a.b)};
}

OTildeElt otilde_section(const Lattice& lat, const MatZ& f) {
  return OTildeElt{f, strict_lower(twist_of(lat, f))};
}

MatZ eaut_reduce(const MatZ& b) {
  MatZ r = strict_lower(b - b.transposed());
  for (std::size_t i = 0; i < b.rows(); ++i) r.at(i, i) = mod2(b.at(i, i));
  return r;
}

std::string show(const EAutElt& u) {
  return "[f=" + show(u.f) + ", b=" + show(u.b) + "]";
}

EAutElt eaut_class(const OTildeElt& u) {
  return EAutElt{u.f, eaut_reduce(u.b)};
}

EAutElt eaut_mul(const EAutElt& u, const EAutElt& v) {
  return EAutElt{u.f * v.f,
                 eaut_reduce(form_pullback(v.f, u.b) + v.b)};
}

EAutElt eaut_inv(const EAutElt& u) {
  MatZ fi = inverse_z(u.f);
  return EAutElt{fi, eaut_reduce(-form_pullback(fi, u.b))};
}

Group otilde_group(const Lattice& lat) {
  IsoList isos = shared_isometries(lat);
  std::size_t r = lat.rank();
  Group g;
  g.name = lat.name + ".O~";
  g.id = Elt::of(OTildeElt{MatZ::identity(r), MatZ(r, r)});
  g.mul = [lat](const Elt& a, const Elt& b) {
    return Elt::of(otilde_mul(lat, a.as<OTildeElt>(), b.as<OTildeElt>()));
  };
  g.inv = [lat](const Elt& a) {
    return Elt::of(otilde_inv(lat, a.as<OTildeElt>()));
  };
  g.eq = [](const Elt& a, const Elt& b) {
    return a.as<OTildeElt>() == b.as<OTildeElt>();
  };
  g.sample = [lat, isos](Rng& rng) {
    return Elt::of(sample_otilde(lat, isos, rng));
  };
  g.show = [](const Elt& a) { return show(a.as<OTildeElt>()); };
  return g;
}

Group eaut_group(const Lattice& lat) {
  IsoList isos = shared_isometries(lat);
  std::size_t r = lat.rank();
  Group g;
  g.name = lat.name + ".E";
  g.id = Elt::of(EAutElt{MatZ::identity(r), MatZ(r, r)});
  g.mul = [](const Elt& a, const Elt& b) {
    return Elt::of(eaut_mul(a.as<EAutElt>(), b.as<EAutElt>()));
  };
  g.inv = [](const Elt& a) { return Elt::of(eaut_inv(a.as<EAutElt>())); };
  g.eq = [](const Elt& a, const Elt& b) {
    return a.as<EAutElt>() == b.as<EAutElt>();
  };
  g.sample = [lat, isos](Rng& rng) {
    return Elt::of(eaut_class(sample_otilde(lat, isos, rng)));
  };
  g.show = [](const Elt& a) { return show(a.as<EAutElt>()); };
  return g;
}

std::string show(const LamGam& e) {
  return "(lam=" + show(e.lam) + ", b=" + show(e.b) + ")";
}

std::string show(const CovGam& e) {
  return "(n=" + show(e.n) + ", i" + std::to_string(e.iota) +
         ", s=" + show(e.s) + ")";
}

std::string show(const CovMod2& e) {
  return "(n=" + show(e.n) + ", i" + std::to_string(e.iota) + ")";
}

std::string show(const TeeOTilde& u) {
  return "(a=" + show(u.a) + ", f=" + show(u.f) + ", b=" + show(u.b) + ")";
}

std::string show(const TeeEAut& u) {
  return "(t=" + show(u.t) + ", f=" + show(u.f) + ", b=" + show(u.b) + ")";
}

LamGam lamgam_make(VecZ lam, MatZ b) {
  if (!is_symmetric(b) || vec_mod2(diagonal_of(b)) != vec_mod2(lam))
    throw std::invalid_argument(
        "lamgam_make: diag(b) must be lam mod 2 with b symmetric");
  return LamGam{std::move(lam), std::move(b)};
}

CovGam covgam_make(const Lattice& lat, VecZ n, int iota, MatZ s) {
  if (!is_symmetric(s) ||
      vec_mod2(diagonal_of(s)) != vec_mod2(lat.i_sharp(n)))
    throw std::invalid_argument(
        "covgam_make: diag(s) must be I#(n) mod 2 with s symmetric");
  return CovGam{std::move(n), ((iota % 2) + 2) % 2, std::move(s)};
}

XMod make_xi_tilde(const Lattice& lat) {
  std::size_t r = lat.rank();

  Group fib;
  fib.name = lat.name + ".Xi~.fib";
  fib.id = Elt::of(LamGam{VecZ::zero(r), MatZ(r, r)});
  fib.mul = [](const Elt& a, const Elt& b) {
    const auto& u = a.as<LamGam>();
    const auto& v = b.as<LamGam>();
    return Elt::of(LamGam{u.lam + v.lam, u.b + v.b});
  };
  fib.inv = [](const Elt& a) {
    const auto& u = a.as<LamGam>();
    return Elt::of(LamGam{-u.lam, -u.b});
  };
  fib.eq = [](const Elt& a, const Elt& b) {
    return a.as<LamGam>() == b.as<LamGam>();
  };
  fib.sample = [lat](Rng& rng) { return Elt::of(sample_lamgam(lat, rng)); };
  fib.show = [](const Elt& a) { return show(a.as<LamGam>()); };

  XMod xm;
  xm.name = lat.name + ".Xi~";
  xm.base = otilde_group(lat);
  xm.fiber = fib;
  xm.act = [](const Elt& a, const Elt& x) {
    const auto& e = a.as<LamGam>();
    const auto& u = x.as<OTildeElt>();
    return Elt::of(
        LamGam{u.f.transposed() * e.lam, form_pullback(u.f, e.b)});
  };
  xm.bnd = [r](const Elt& a) {
    return Elt::of(OTildeElt{MatZ::identity(r), a.as<LamGam>().b});
  };
  return xm;
}

XMod make_xi(const Lattice& lat) {
  std::size_t r = lat.rank();

  Group fib;
  fib.name = lat.name + ".Xi.fib";
  fib.id = Elt::of(VecZ::zero(r));
  fib.mul = [](const Elt& a, const Elt& b) {
    return Elt::of(a.as<VecZ>() + b.as<VecZ>());
  };
  fib.inv = [](const Elt& a) { return Elt::of(-a.as<VecZ>()); };
  fib.eq = [](const Elt& a, const Elt& b) {
    return a.as<VecZ>() == b.as<VecZ>();
  };
  fib.sample = [r](Rng& rng) { return Elt::of(rng.vec_z(r, 3)); };
  fib.show = [](const Elt& a) { return show(a.as<VecZ>()); };

  XMod xm;
  xm.name = lat.name + ".Xi";
  xm.base = eaut_group(lat);
  xm.fiber = fib;
  xm.act = [](const Elt& a, const Elt& x) {
    return Elt::of(x.as<EAutElt>().f.transposed() * a.as<VecZ>());
  };
  xm.bnd = [r](const Elt& a) {
    return Elt::of(
        EAutElt{MatZ::identity(r), diag_of(vec_mod2(a.as<VecZ>()))});
  };
  return xm;
}

XMod make_xi_tilde_prime(const Lattice& lat) {
  IsoList isos = shared_isometries(lat);
  std::size_t r = lat.rank();

  Group base;
  base.name = lat.name + ".tO~";
  base.id = Elt::of(TeeOTilde{VecQ::zero(r), MatZ::identity(r), MatZ(r, r)});
  base.mul = [](const Elt& a, const Elt& b) {
    const auto& u = a.as<TeeOTilde>();
    const auto& v = b.as<TeeOTilde>();
    return Elt::of(TeeOTilde{u.a + to_q(u.f) * v.a, u.f * v.f,
                             form_pullback(v.f, u.b) + v.b});
  };
  base.inv = [](const Elt& a) {
    const auto& u = a.as<TeeOTilde>();
    MatZ fi = inverse_z(u.f);
    return Elt::of(
        TeeOTilde{-(to_q(fi) * u.a), fi, -form_pullback(fi, u.b)});
  };
  base.eq = [](const Elt& a, const Elt& b) {
    return a.as<TeeOTilde>() == b.as<TeeOTilde>();
  };
  base.sample = [lat, isos, r](Rng& rng) {
    OTildeElt u = sample_otilde(lat, isos, rng);
    return Elt::of(TeeOTilde{rng.vec_q(r, 2, 8), u.f, u.b});
  };
  base.show = [](const Elt& a) { return show(a.as<TeeOTilde>()); };

  Group fib;
  fib.name = lat.name + ".Lcov";
  fib.id = Elt::of(CovGam{VecZ::zero(r), 0, MatZ(r, r)});
  fib.mul = [lat](const Elt& a, const Elt& b) {
    const auto& u = a.as<CovGam>();
    const auto& v = b.as<CovGam>();
    int iota = (u.iota + v.iota + m2(lat.j_pair(u.n, v.n))) % 2;
    return Elt::of(CovGam{u.n + v.n, iota, u.s + v.s});
  };
  fib.inv = [lat](const Elt& a) {
    const auto& u = a.as<CovGam>();
    return Elt::of(
        CovGam{-u.n, (u.iota + m2(lat.j_pair(u.n, u.n))) % 2, -u.s});
  };
  fib.eq = [](const Elt& a, const Elt& b) {
    return a.as<CovGam>() == b.as<CovGam>();
  };
  fib.sample = [lat](Rng& rng) { return Elt::of(sample_covgam(lat, rng)); };
  fib.show = [](const Elt& a) { return show(a.as<CovGam>()); };

  XMod xm;
  xm.name = lat.name + ".Xi~'";
  xm.base = base;
  xm.fiber = fib;
  xm.act = [](const Elt& a, const Elt& x) {
    const auto& e = a.as<CovGam>();
    const auto& u = x.as<TeeOTilde>();
    MatZ fi = inverse_z(u.f);
    VecZ n2 = fi * e.n;
    int iota = (e.iota + m2(pair_with(u.b, n2, n2))) % 2;
    return Elt::of(CovGam{n2, iota, form_pullback(u.f, e.s)});
  };
  xm.bnd = [r](const Elt& a) {
    const auto& e = a.as<CovGam>();
    return Elt::of(
        TeeOTilde{to_q(e.n).scaled(Rational(1, 2)), MatZ::identity(r), e.s});
  };
  return xm;
}

XMod make_xi_prime(const Lattice& lat) {
  IsoList isos = shared_isometries(lat);
  std::size_t r = lat.rank();

  Group base;
  base.name = lat.name + ".TE";
  base.id = Elt::of(TeeEAut{VecQ::zero(r), MatZ::identity(r), MatZ(r, r)});
  base.mul = [](const Elt& a, const Elt& b) {
    const auto& u = a.as<TeeEAut>();
    const auto& v = b.as<TeeEAut>();
    EAutElt e = eaut_mul(EAutElt{u.f, u.b}, EAutElt{v.f, v.b});
    return Elt::of(TeeEAut{q_frac(u.t + to_q(u.f) * v.t), e.f, e.b});
  };
  base.inv = [](const Elt& a) {
    const auto& u = a.as<TeeEAut>();
    EAutElt e = eaut_inv(EAutElt{u.f, u.b});
    return Elt::of(TeeEAut{q_frac(-(to_q(e.f) * u.t)), e.f, e.b});
  };
  base.eq = [](const Elt& a, const Elt& b) {
    return a.as<TeeEAut>() == b.as<TeeEAut>();
  };
  base.sample = [lat, isos, r](Rng& rng) {
    EAutElt e = eaut_class(sample_otilde(lat, isos, rng));
    return Elt::of(TeeEAut{q_frac(rng.vec_q(r, 2, 8)), e.f, e.b});
  };
  base.show = [](const Elt& a) { return show(a.as<TeeEAut>()); };

  Group fib;
  fib.name = lat.name + ".Lcov2";
  fib.id = Elt::of(CovMod2{VecZ::zero(r), 0});
  fib.mul = [lat](const Elt& a, const Elt& b) {
    const auto& u = a.as<CovMod2>();
    const auto& v = b.as<CovMod2>();
    int iota = (u.iota + v.iota + m2(lat.j_pair(u.n, v.n))) % 2;
    return Elt::of(CovMod2{vec_mod2(u.n + v.n), iota});
  };
  fib.inv = [lat](const Elt& a) {
    const auto& u = a.as<CovMod2>();
    return Elt::of(CovMod2{u.n, (u.iota + m2(lat.j_pair(u.n, u.n))) % 2});
  };
  fib.eq = [](const Elt& a, const Elt& b) {
    return a.as<CovMod2>() == b.as<CovMod2>();
  };
  fib.sample = [r](Rng& rng) {
    return Elt::of(CovMod2{vec_mod2(rng.vec_z(r, 3)), rng.bit() ? 1 : 0});
  };
  fib.show = [](const Elt& a) { return show(a.as<CovMod2>()); };

  XMod xm;
  xm.name = lat.name + ".Xi'";
  xm.base = base;
  xm.fiber = fib;
  xm.act = [](const Elt& a, const Elt& x) {
    const auto& e = a.as<CovMod2>();
    const auto& u = x.as<TeeEAut>();
    VecZ n2 = inverse_z(u.f) * e.n;
    int iota = (e.iota + m2(pair_with(u.b, n2, n2))) % 2;
    return Elt::of(CovMod2{vec_mod2(n2), iota});
  };
  xm.bnd = [lat, r](const Elt& a) {
    const auto& e = a.as<CovMod2>();
    return Elt::of(TeeEAut{q_frac(to_q(e.n).scaled(Rational(1, 2))),
                           MatZ::identity(r),
                           diag_of(vec_mod2(lat.i_sharp(e.n)))});
  };
  return xm;
}

StrictMor theta_comparison(const Lattice& lat) {
  StrictMor m;
  m.src = make_xi_tilde(lat);
  m.tgt = wact_theta(lat);
  m.p0 = [lat](const Elt& x) {
    const auto& u = x.as<OTildeElt>();
    return Elt::of(aff_basic_t(lat, u.f, u.b));
  };
  m.p1 = [](const Elt& a) {
    const auto& e = a.as<LamGam>();
    return Elt::of(eta_make_t(to_q(e.b).scaled(Rational(1, 2)),
                              to_q(e.lam).scaled(Rational(-1, 2))));
  };
  return m;
}

WeakMorphism theta_prime_comparison(const Lattice& lat) {
  WeakMorphism m;
  m.src = make_xi_tilde_prime(lat);
  m.tgt = wact_theta_prime(lat);
  m.p0 = [lat](const Elt& x) {
    const auto& u = x.as<TeeOTilde>();
    return Elt::of(aff_basic(lat, u.a, u.f, u.b));
  };
  std::size_t r = lat.rank();
  m.p1 = [lat, r](const Elt& a) {
    const auto& e = a.as<CovGam>();
    return Elt::of(eta_make(e.n, to_q(e.s).scaled(Rational(1, 2)),
                            to_q(lat.j_sharp(e.n)).scaled(Rational(1, 2)),
                            VecQ::zero(r), Rational(e.iota, 2)));
  };
  m.kappa = [r](const Elt& x, const Elt& y) {
    const auto& u = x.as<TeeOTilde>();
    const auto& v = y.as<TeeOTilde>();
    MatQ gt = to_q(v.f).transposed();
    MatQ bq = to_q(u.b);
    VecQ l = gt * ((bq - bq.transposed()) * v.a);
    VecQ mm = (gt * (bq * v.a)).scaled(Rational(2));
    Rational c = pair_with(u.b, v.a, v.a) * 2;
    return Elt::of(eta_make(VecZ::zero(r), MatQ(r, r), l, mm, c));
  };
  return m;
}

AffWAut lambda_coboundary(const Lattice& lat, const VecZ& lam) {
  AffWAut h = aff_identity(lat.rank());
  h.ell = to_q(lam).scaled(Rational(1, 2));
  return aff_canonical(h);
}

Report xi_equivalence_check(const Lattice& lat, std::uint64_t seed,
                            int trials) {
  Report rep;
  std::string p = "xi." + lat.name + ".";
  if (lat.rank() > 4) {
    rep.add(skip_result(p + "all", "rank above enumeration bound"));
    return rep;
  }
  std::size_t r = lat.rank();

  XMod xt = make_xi_tilde(lat);
  XMod xi = make_xi(lat);
  rep.merge(xmod_axioms(xt, seed, trials));
  rep.merge(xmod_axioms(xi, seed, trials));

  StrictMor cmp = theta_comparison(lat);
  rep.merge(strict_check(cmp, seed, trials, p + "cmp"));

  // sampled basic twists are weak self-maps of theta in their own right
  {
    XMod theta = make_theta(lat);
    IsoList isos = shared_isometries(lat);
    Rng rng(derive_seed(seed, p + "basic"));
    int wt = std::max(40, trials / 8);
    for (int k = 0; k < 2; ++k) {
      OTildeElt u = sample_otilde(lat, isos, rng);
      rep.merge(weak_check(aff_to_weak_t(theta, aff_basic_t(lat, u.f, u.b)),
                           derive_seed(seed, p + "basic" + std::to_string(k)),
                           wt, p + "basic" + std::to_string(k)));
    }
  }

  // The boundary kernel is 2Lam and lands on the characters x -> [-mu(x)].
  {
    std::string id = p + "pi1_characters";
    Rng rng(derive_seed(seed, id));
    bool ok = true;
    std::string wit;
    for (std::size_t a = 0; a < r && ok; ++a) {
      VecZ mu = VecZ::unit(r, a);
      EtaDescT d =
          cmp.p1(Elt::of(LamGam{mu.scaled(Int(2)), MatZ(r, r)})).as<EtaDescT>();
      ok = d.q == MatQ(r, r) && d.l == to_q(-mu);
      if (ok) {
        VecQ x = rng.vec_q(r, 3, 12);
        ok = eta_value_t(d, x) ==
             FibElt{VecZ::zero(r), phase_scalar(-x[a])};
      }
      if (!ok) wit = "generator " + std::to_string(a);
    }
    for (int t = 0; t < trials && ok; ++t) {
      LamGam e = sample_lamgam(lat, rng);
      bool in_ker = xt.base.eq(xt.bnd(Elt::of(e)), xt.base.id);
      ok = in_ker == (e.b == MatZ(r, r));
      if (ok && in_ker) {
        ok = vec_mod2(e.lam) == VecZ::zero(r);
        if (ok && !(e.lam == VecZ::zero(r)))
          ok = !cmp.tgt.fiber.eq(cmp.p1(Elt::of(e)), cmp.tgt.fiber.id);
      }
      if (!ok) wit = "e=" + show(e);
    }
    rep.add(ok ? pass_result(id, trials)
               : fail_result(id, trials, wit));
  }

  // Finite bookkeeping: |E| = |O| 2^r, and the classes over the identity
  // isometry are exactly the boundary image.
  {
    std::string id = p + "pi0_squares";
    std::vector<MatZ> isos = isometry_group(lat);
    std::vector<VecZ> diags = f2_vectors(r);
    std::set<std::string> classes;
    std::vector<EAutElt> members;
    for (const MatZ& f : isos)
      for (const VecZ& d : diags) {
        OTildeElt u = otilde_section(lat, f);
        EAutElt e = eaut_class(OTildeElt{u.f, u.b + diag_of(d)});
        members.push_back(e);
        classes.insert(show(e));
      }
    bool ok = classes.size() == isos.size() * diags.size();
    std::string wit = "count " + std::to_string(classes.size());
    if (ok) {
      Rng rng(derive_seed(seed, id));
      int probes = std::min(trials, 200);
      for (int t = 0; t < probes && ok; ++t) {
        const EAutElt& x =
            members[static_cast<std::size_t>(rng.int_in(
                0, static_cast<long long>(members.size()) - 1))];
        const EAutElt& y =
            members[static_cast<std::size_t>(rng.int_in(
                0, static_cast<long long>(members.size()) - 1))];
        ok = classes.count(show(eaut_mul(x, y))) == 1;
        if (!ok) wit = "product left the table";
      }
    }
    if (ok) {
      for (const VecZ& d : diags) {
        EAutElt viaxi = xi.bnd(Elt::of(d)).as<EAutElt>();
        EAutElt direct =
            eaut_class(OTildeElt{MatZ::identity(r), diag_of(d)});
        if (!(viaxi == direct)) {
          ok = false;
          wit = "identity fibre d=" + show(d);
          break;
        }
      }
    }
    rep.add(ok ? pass_result(id, 1) : fail_result(id, 1, wit));
  }
  return rep;
}

Report xi_prime_equivalence_check(const Lattice& lat, std::uint64_t seed,
                                  int trials) {
  Report rep;
  std::string p = "xip." + lat.name + ".";
  if (lat.rank() > 4) {
    rep.add(skip_result(p + "all", "rank above enumeration bound"));
    return rep;
  }
  std::size_t r = lat.rank();

  XMod xtp = make_xi_tilde_prime(lat);
  XMod xp = make_xi_prime(lat);
  rep.merge(xmod_axioms(xtp, seed, trials));
  rep.merge(xmod_axioms(xp, seed, trials));

  WeakMorphism cmp = theta_prime_comparison(lat);
  rep.merge(weak_check(cmp, seed, trials, p + "cmp"));

  // delta of a pure hessian splits into the coboundary of its diagonal
  // and the quadratic-sector twist
  {
    std::string id = p + "delta_hessian";
    Rng rng(derive_seed(seed, id));
    bool ok = true;
    std::string wit;
    for (int t = 0; t < trials && ok; ++t) {
      MatZ b = sample_symmetric(rng, r, 3);
      VecZ lam = diagonal_of(b);
      AffWAut lhs = eta_delta(
          lat, eta_make(VecZ::zero(r), to_q(b).scaled(Rational(1, 2)),
                        VecQ::zero(r), VecQ::zero(r), Rational(0)));
      AffWAut rhs =
          aff_compose(lambda_coboundary(lat, lam),
                      aff_basic(lat, VecQ::zero(r), MatZ::identity(r), b));
      ok = aff_canonical(lhs) == aff_canonical(rhs);
      if (ok) {
        AffWAut h = lambda_coboundary(lat, lam);
        for (std::size_t i = 0; i < r && ok; ++i) {
          VecZ mi = VecZ::unit(r, i);
          ok = aff_p1(h, FibElt{mi, Scalar::one()}) ==
               FibElt{mi, phase_scalar(Rational(lam[i], 2))};
        }
      }
      if (!ok) wit = "b=" + show(b);
    }
    rep.add(ok ? pass_result(id, trials) : fail_result(id, trials, wit));
  }

  // the fiber kernel is the sign character eps^iota
  {
    std::string id = p + "pi1_sign";
    Rng rng(derive_seed(seed, id));
    bool ok = true;
    std::string wit;
    for (int iota = 0; iota < 2 && ok; ++iota) {
      EtaDesc d =
          cmp.p1(Elt::of(CovGam{VecZ::zero(r), iota, MatZ(r, r)}))
              .as<EtaDesc>();
      VecQ x = rng.vec_q(r, 3, 12);
      ok = eta_value(d, TeePm{x, 1}) ==
               FibElt{VecZ::zero(r), Scalar::one()} &&
           eta_value(d, TeePm{x, -1}) ==
               FibElt{VecZ::zero(r), phase_scalar(Rational(iota, 2))};
      if (!ok) wit = "iota=" + std::to_string(iota);
    }
    for (int t = 0; t < trials && ok; ++t) {
      CovGam e = sample_covgam(lat, rng);
      bool in_ker = xtp.base.eq(xtp.bnd(Elt::of(e)), xtp.base.id);
      ok = in_ker == (e.n == VecZ::zero(r) && e.s == MatZ(r, r));
      if (!ok) wit = "e=" + show(e);
    }
    if (ok)
      ok = !cmp.tgt.fiber.eq(
          cmp.p1(Elt::of(CovGam{VecZ::zero(r), 1, MatZ(r, r)})),
          cmp.tgt.fiber.id);
    rep.add(ok ? pass_result(id, trials) : fail_result(id, trials, wit));
  }

  // flipping the sign of the eps B(gx, b) term must break the cocycle
  // identity; the witness count shows the sampling has teeth
  {
    std::string id = p + "kappa_mutation";
    Rng rng(derive_seed(seed, id));
    auto mutant = [r](const Elt& x, const Elt& y) {
      const auto& u = x.as<TeeOTilde>();
      const auto& v = y.as<TeeOTilde>();
      MatQ gt = to_q(v.f).transposed();
      MatQ bq = to_q(u.b);
      VecQ l = gt * ((-bq - bq.transposed()) * v.a);
      VecQ mm = (gt * (bq * v.a)).scaled(Rational(-2));
      Rational c = pair_with(u.b, v.a, v.a) * 2;
      return Elt::of(eta_make(VecZ::zero(r), MatQ(r, r), l, mm, c));
    };
    const Group& tf = cmp.tgt.fiber;
    bool found = false;
    int t = 0;
    for (; t < 200 && !found; ++t) {
      Elt x = xtp.base.sample(rng), y = xtp.base.sample(rng),
          z = xtp.base.sample(rng);
      Elt lhs = tf.mul(cmp.tgt.act(mutant(x, y), cmp.p0(z)),
                       mutant(xtp.base.mul(x, y), z));
      Elt rhs = tf.mul(mutant(y, z), mutant(x, xtp.base.mul(y, z)));
      found = !tf.eq(lhs, rhs);
    }
    rep.add(found ? pass_result(id, t)
                  : fail_result(id, 200, "mutated cocycle stayed coherent"));
  }

  // outer classes: composing with the lift of -id absorbs the sign of an
  // isometry strictly, so pi0 halves to PO
  {
    std::string id = p + "pi0_outer";
    std::vector<MatZ> isos = isometry_group(lat);
    MatZ minus = -MatZ::identity(r);
    bool ok =
        std::find(isos.begin(), isos.end(), minus) != isos.end() &&
        isos.size() % 2 == 0;
    std::string wit = "-id missing";
    if (ok) {
      OTildeElt um = otilde_section(lat, minus);
      for (const MatZ& f : isos) {
        OTildeElt uf = otilde_section(lat, f);
        OTildeElt w = otilde_mul(lat, um, uf);
        AffWAut lhs =
            aff_canonical(aff_compose(aff_basic(lat, VecQ::zero(r), um.f, um.b),
                                      aff_basic(lat, VecQ::zero(r), uf.f, uf.b)));
        if (!(lhs == aff_canonical(aff_basic(lat, VecQ::zero(r), w.f, w.b)))) {
          ok = false;
          wit = "composite not strict at f=" + show(f);
          break;
        }
      }
    }
    if (ok) {
      std::set<std::string> classes;
      for (const MatZ& f : isos) classes.insert(std::min(show(f), show(-f)));
      ok = classes.size() * 2 == isos.size();
      wit = "class count " + std::to_string(classes.size());
      if (ok && lat.name == "U") ok = classes.size() == 2;
    }
    rep.add(ok ? pass_result(id, 1) : fail_result(id, 1, wit));
  }
  return rep;
}

namespace {

// two-torsion cover: (a, iota) over F2 with the half-pairing twist
struct Cov2 {
  VecZ a;
  int iota = 0;
  bool operator==(const Cov2&) const = default;
  bool operator<(const Cov2& o) const {
    return a < o.a || (a == o.a && iota < o.iota);
  }
};

Cov2 cov2_mul(const Lattice& lat, const Cov2& u, const Cov2& v) {
  return Cov2{vec_mod2(u.a + v.a),
              (u.iota + v.iota + m2(lat.j_pair(v.a, u.a))) % 2};
}

// cochains on Lam/2Lam as 0/1 tables indexed by bit masks
std::size_t mask_of(const VecZ& a) {
  std::size_t m = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (mod2(a[i]) != 0) m |= std::size_t{1} << i;
  return m;
}

int beta_mod2(const Lattice& lat, const MatZ& f, const VecZ& a,
              const VecZ& b) {
  return m2(lat.j_pair(a, b) + pair_with(lat.j, f * a, f * b));
}

}  // namespace

Report unimodular_eprime_check(const Lattice& lat, std::uint64_t seed,
                               int trials) {
  Report rep;
  std::string p = "eprime." + lat.name + ".";
  if (!lat.is_unimodular()) {
    rep.add(skip_result(p + "all", "I not unimodular"));
    return rep;
  }
  if (lat.rank() > 4) {
    rep.add(skip_result(p + "all", "rank above enumeration bound"));
    return rep;
  }
  std::size_t r = lat.rank();
  std::vector<VecZ> pts = f2_vectors(r);
  std::size_t n = pts.size();
  std::vector<MatZ> ophi = orthogonal_mod2(lat);

  // (f, c) with dc = J + f*J mod 2; one solution per f by filling along
  // lowest set bits, then the full fibre by adding linear forms
  struct EPrime {
    MatZ f;
    std::vector<int> c;
    bool operator<(const EPrime& o) const {
      return f < o.f || (f == o.f && c < o.c);
    }
  };
  std::vector<EPrime> eprime;
  bool built = true;
  std::string wit;
  for (const MatZ& f : ophi) {
    std::vector<int> c(n, 0);
    for (std::size_t s = 1; s < n; ++s) {
      std::size_t low = s & (~s + 1);
      std::size_t i = 0;
      while ((std::size_t{1} << i) != low) ++i;
      c[s] = (c[s ^ low] + beta_mod2(lat, f, pts[s ^ low], pts[low])) % 2;
    }
    for (std::size_t s = 0; s < n && built; ++s)
      for (std::size_t u = 0; u < n && built; ++u) {
        std::size_t su = mask_of(pts[s] + pts[u]);
        built = (c[s] + c[u] + c[su]) % 2 == beta_mod2(lat, f, pts[s], pts[u]);
        if (!built) wit = "no cochain for f=" + show(f);
      }
    if (!built) break;
    for (std::size_t lin = 0; lin < n; ++lin) {
      std::vector<int> cl(n);
      for (std::size_t s = 0; s < n; ++s)
        cl[s] = (c[s] + m2(lat.i_pair(pts[lin], pts[s]))) % 2;
      if (cl[0] != 0) {
        built = false;
        wit = "cochain not normalised";
        break;
      }
      eprime.push_back(EPrime{f, cl});
    }
  }

  {
    std::string id = p + "enum";
    bool ok = built && eprime.size() == ophi.size() * n;
    if (ok) {
      // distinct linear twists give distinct cochains since i# is onto mod 2
      std::set<EPrime> all(eprime.begin(), eprime.end());
      ok = all.size() == eprime.size();
      // closure under (f,c)(g,c') = (fg mod 2, c.g + c')
      for (std::size_t a = 0; a < eprime.size() && ok; ++a)
        for (std::size_t b = 0; b < eprime.size() && ok; ++b) {
          EPrime prod;
          prod.f = mat_mod2(eprime[a].f * eprime[b].f);
          prod.c.resize(n);
          for (std::size_t s = 0; s < n; ++s)
            prod.c[s] = (eprime[a].c[mask_of(eprime[b].f * pts[s])] +
                         eprime[b].c[s]) %
                        2;
          ok = all.count(prod) == 1;
          if (!ok) wit = "product left the table";
        }
    } else if (built) {
      wit = "count " + std::to_string(eprime.size());
    }
    rep.add(ok ? pass_result(id, 1) : fail_result(id, 1, wit));
  }

  // independent oracle at rank <= 2: all automorphisms of the cover, by
  // images of generators
  if (r <= 2) {
    std::string id = p + "aut_oracle";
    std::vector<Cov2> elems;
    for (const VecZ& a : pts)
      for (int i = 0; i < 2; ++i) elems.push_back(Cov2{a, i});
    // normal form exponents: (a, i) = prod_k e_k^{a_k} * z^{i - t(a)}
    auto word_iota = [&](const VecZ& a) {
      Cov2 acc{VecZ::zero(r), 0};
      for (std::size_t k = 0; k < r; ++k)
        if (mod2(a[k]) != 0) acc = cov2_mul(lat, acc, Cov2{VecZ::unit(r, k), 0});
      return acc.iota;
    };
    std::set<std::vector<Cov2>> autos_found;
    std::vector<std::size_t> gen_img(r, 0);
    std::size_t total = 1;
    for (std::size_t k = 0; k < r; ++k) total *= elems.size();
    for (std::size_t code = 0; code < total; ++code) {
      std::size_t c = code;
      std::vector<Cov2> gi(r);
      for (std::size_t k = 0; k < r; ++k) {
        gi[k] = elems[c % elems.size()];
        c /= elems.size();
      }
      auto image = [&](const Cov2& u) {
        Cov2 acc{VecZ::zero(r), 0};
        for (std::size_t k = 0; k < r; ++k)
          if (mod2(u.a[k]) != 0) acc = cov2_mul(lat, acc, gi[k]);
        acc.iota = (acc.iota + u.iota + word_iota(u.a)) % 2;
        return acc;
      };
      bool hom = true;
      std::set<Cov2> img;
      for (const Cov2& u : elems) img.insert(image(u));
      if (img.size() != elems.size()) continue;
      for (const Cov2& u : elems)
        for (const Cov2& v : elems) {
          if (!(image(cov2_mul(lat, u, v)) ==
                cov2_mul(lat, image(u), image(v)))) {
            hom = false;
            break;
          }
        }
      if (!hom) continue;
      std::vector<Cov2> table;
      for (const Cov2& u : elems) table.push_back(image(u));
      autos_found.insert(table);
    }
    bool ok = autos_found.size() == eprime.size();
    wit = "aut count " + std::to_string(autos_found.size());
    if (ok) {
      // every (f, c) acts as (a, i) -> (fa, i + c(a)) and is on the list
      for (const EPrime& e : eprime) {
        std::vector<Cov2> table;
        for (const Cov2& u : elems)
          table.push_back(Cov2{vec_mod2(e.f * u.a),
                               (u.iota + e.c[mask_of(u.a)]) % 2});
        if (autos_found.count(table) != 1) {
          ok = false;
          wit = "pair action missing from oracle";
          break;
        }
      }
    }
    rep.add(ok ? pass_result(id, 1) : fail_result(id, 1, wit));
  }

  // conjugations: exactly 2^r of them, with linear cochains I(b, .)
  {
    std::string id = p + "inner";
    std::set<std::vector<Cov2>> inner;
    std::vector<Cov2> elems;
    for (const VecZ& a : pts)
      for (int i = 0; i < 2; ++i) elems.push_back(Cov2{a, i});
    bool ok = true;
    for (const VecZ& b : pts) {
      std::vector<Cov2> table;
      for (const Cov2& u : elems) {
        Cov2 bi{b, 0};
        Cov2 conj = cov2_mul(lat, cov2_mul(lat, bi, u),
                             Cov2{b, m2(lat.j_pair(b, b))});
        table.push_back(conj);
        if (!(conj == Cov2{u.a, (u.iota + m2(lat.i_pair(b, u.a))) % 2}))
          ok = false;
      }
      inner.insert(table);
    }
    ok = ok && inner.size() == n;
    rep.add(ok ? pass_result(id, 1)
               : fail_result(id, 1, "inner count " +
                                        std::to_string(inner.size())));
  }

  // the quotient by the torus part is the form's automorphism group, and
  // E is recovered as the pullback along O -> O(phi)
  {
    std::string id = p + "pullback";
    std::set<std::string> ophi_seen;
    for (const EPrime& e : eprime) ophi_seen.insert(show(e.f));
    bool ok = ophi_seen.size() == ophi.size() &&
              eprime.size() == ophi.size() * n;
    std::string w2 = "projection not onto";
    if (ok) {
      std::vector<MatZ> isos = isometry_group(lat);
      std::vector<VecZ> diags = f2_vectors(r);
      std::set<std::string> image;
      std::set<EPrime> all(eprime.begin(), eprime.end());
      for (const MatZ& f : isos)
        for (const VecZ& d : diags) {
          OTildeElt u = otilde_section(lat, f);
          EAutElt e = eaut_class(OTildeElt{u.f, u.b + diag_of(d)});
          EPrime ph;
          ph.f = mat_mod2(e.f);
          ph.c.resize(n);
          for (std::size_t s = 0; s < n; ++s)
            ph.c[s] = m2(pair_with(e.b, pts[s], pts[s]));
          if (all.count(ph) != 1) {
            ok = false;
            w2 = "image misses E' at " + show(e);
            break;
          }
          image.insert(show(e.f) + "#" + show(ph.f) +
                       [&] {
                         std::string t;
                         for (int v : ph.c) t += char('0' + v);
                         return t;
                       }());
        }
      if (ok) {
        ok = image.size() == isos.size() * diags.size();
        w2 = "pullback size " + std::to_string(image.size());
      }
    }
    if (ok && lat.name == "U")
      ok = eprime.size() == 8 && ophi.size() == 2;
    rep.add(ok ? pass_result(id, 1) : fail_result(id, 1, w2));
  }
  (void)seed;
  (void)trials;
  return rep;
}

Report ad_sequence_check(const Lattice& lat, std::uint64_t seed, int trials) {
  Report rep;
  std::string p = "ad." + lat.name + ".";
  std::size_t r = lat.rank();

  auto mul = [](const TeePm& u, const TeePm& v) {
    return TeePm{q_frac(u.x + v.x.scaled(Rational(u.eps))), u.eps * v.eps};
  };
  auto inv = [](const TeePm& u) {
    return TeePm{q_frac(-u.x.scaled(Rational(u.eps))), u.eps};
  };
  auto sample = [r](Rng& rng) {
    return TeePm{q_frac(rng.vec_q(r, 2, 8)), rng.sign()};
  };
  TeePm id_elt{VecQ::zero(r), 1};

  {
    std::string id = p + "square_kernel";
    Rng rng(derive_seed(seed, id));
    bool ok = true;
    std::string wit;
    for (int t = 0; t < trials && ok; ++t) {
      TeePm u = sample(rng);
      u.eps = 1;
      bool sq_id = mul(u, u) == id_elt;
      bool half = true;
      for (std::size_t i = 0; i < r; ++i)
        half = half && (u.x[i] == 0 || u.x[i] == Rational(1, 2));
      ok = sq_id == half;
      if (!ok) wit = "u=" + show(u.x);
    }
    if (ok) {
      std::set<std::string> tors;
      for (const VecZ& d : f2_vectors(r))
        tors.insert(show(q_frac(to_q(d).scaled(Rational(1, 2)))));
      ok = tors.size() == f2_vectors(r).size();
      if (!ok) wit = "two-torsion enumeration collided";
    }
    rep.add(ok ? pass_result(id, trials) : fail_result(id, trials, wit));
  }

  {
    std::string id = p + "reflections_order2";
    Rng rng(derive_seed(seed, id));
    bool ok = true;
    for (int t = 0; t < trials && ok; ++t) {
      TeePm u = sample(rng);
      u.eps = -1;
      ok = mul(u, u) == id_elt;
    }
    rep.add(ok ? pass_result(id, trials)
               : fail_result(id, trials, "reflection of infinite order"));
  }

  // Ad is affine with linear part +-id, and its kernel is the plain
  // two-torsion inside the untwisted component
  {
    std::string id = p + "ad_affine";
    Rng rng(derive_seed(seed, id));
    bool ok = true;
    std::string wit;
    for (int t = 0; t < trials && ok; ++t) {
      TeePm u = sample(rng), v = sample(rng), w = sample(rng);
      TeePm lhs = mul(mul(u, v), inv(u));
      VecQ expect = v.x.scaled(Rational(u.eps));
      if (v.eps < 0) expect = expect + u.x.scaled(Rational(2));
      ok = lhs == TeePm{q_frac(expect), v.eps};
      if (ok) {
        TeePm both = mul(mul(mul(u, w), v), inv(mul(u, w)));
        ok = both == mul(mul(u, mul(mul(w, v), inv(w))), inv(u));
      }
      if (ok) {
        bool central = u.eps == 1;
        for (std::size_t i = 0; i < r && central; ++i)
          central = u.x[i] == 0 || u.x[i] == Rational(1, 2);
        if (central) {
          TeePm probe = sample(rng);
          ok = mul(mul(u, probe), inv(u)) == probe;
        } else {
          // a quarter step or a sign flip always witnesses noncentrality
          TeePm probe =
              u.eps == -1
                  ? TeePm{to_q(VecZ::unit(r, 0)).scaled(Rational(1, 4)), 1}
                  : TeePm{VecQ::zero(r), -1};
          ok = !(mul(mul(u, probe), inv(u)) == probe);
        }
      }
      if (!ok) wit = "u=" + show(u.x) + " eps=" + std::to_string(u.eps);
    }
    rep.add(ok ? pass_result(id, trials) : fail_result(id, trials, wit));
  }
  return rep;
}

}  // namespace cattorus
