#include "cattorus/weak.hpp"

#include <memory>
#include <sstream>
#include <stdexcept>

#include "cattorus/lattice.hpp"

namespace cattorus {

namespace {

// row . (g x) as a row vector, i.e. g^T row
VecQ row_times(const VecQ& row, const MatZ& g) {
  return to_q(g.transposed()) * row;
}

MatQ symmetrized(const MatQ& q) {
  return (q + q.transposed()).scaled(Rational(1, 2));
}

MatZ mat_to_z(const MatQ& m) {
  MatZ r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (rat_den(m.at(i, j)) != 1)
        throw std::invalid_argument("mat_to_z: non-integral entry");
      r.at(i, j) = rat_num(m.at(i, j));
    }
  return r;
}

bool half_integral(const MatQ& q) {
  for (std::size_t i = 0; i < q.rows(); ++i)
    for (std::size_t j = 0; j < q.cols(); ++j)
      if (rat_den(q.at(i, j) * 2) != 1) return false;
  return true;
}

VecQ diagonal(const MatQ& q) {
  VecQ d(q.rows());
  for (std::size_t i = 0; i < q.rows(); ++i) d[i] = q.at(i, i);
  return d;
}

MatZ strict_lower(const MatZ& c) {
  MatZ r(c.rows(), c.cols());
  for (std::size_t i = 0; i < c.rows(); ++i)
    for (std::size_t j = 0; j < i; ++j) r.at(i, j) = c.at(i, j);
  return r;
}

int sheet(int eps) { return eps > 0 ? 0 : 1; }

}  // namespace

KappaQuad kappa_zero(std::size_t rank) {
  return KappaQuad{MatQ(rank, rank), VecQ::zero(rank), VecQ::zero(rank),
                   Rational(0)};
}

Rational kappa_value(const KappaQuad& k, const VecQ& x, const VecQ& y) {
  return dot(x, k.p * y) + dot(k.lx, x) + dot(k.ly, y) + k.c0;
}

KappaQuad kappa_pull(const KappaQuad& k, const MatZ& g, const VecQ& wg,
                     const Int& s, const Int& t) {
  MatQ gq = to_q(g);
  KappaQuad r;
  r.p = gq.transposed() * k.p * gq;
  r.lx = row_times(k.lx, g) + (gq.transposed() * (k.p * wg)).scaled(Rational(t));
  r.ly = row_times(k.ly, g) +
         (gq.transposed() * (k.p.transposed() * wg)).scaled(Rational(s));
  r.c0 = dot(wg, k.p * wg) * Rational(s * t) + dot(k.lx, wg) * Rational(s) +
         dot(k.ly, wg) * Rational(t) + k.c0;
  return r;
}

KappaQuad kappa_add(const KappaQuad& a, const KappaQuad& b) {
  return KappaQuad{a.p + b.p, a.lx + b.lx, a.ly + b.ly, a.c0 + b.c0};
}

KappaQuad kappa_neg(const KappaQuad& a) {
  return KappaQuad{-a.p, -a.lx, -a.ly, -a.c0};
}

std::string show(const AffWAut& f) {
  std::ostringstream os;
  os << "f=" << show(f.f) << " w=" << show(f.w) << " ell=" << show(f.ell);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      const KappaQuad& k = f.k[i][j];
      os << " k" << i << j << "={p=" << show(k.p) << " lx=" << show(k.lx)
         << " ly=" << show(k.ly) << " c0=" << show(k.c0) << "}";
    }
  return os.str();
}

std::string show(const EtaDesc& e) {
  std::ostringstream os;
  os << "a=" << show(e.a) << " q=" << show(e.q) << " l=" << show(e.l)
     << " m=" << show(e.m) << " c=" << show(e.c);
  return os.str();
}

AffWAut aff_identity(std::size_t rank) {
  AffWAut f;
  f.f = MatZ::identity(rank);
  f.w = VecQ::zero(rank);
  f.ell = VecQ::zero(rank);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) f.k[i][j] = kappa_zero(rank);
  return f;
}

AffWAut aff_canonical(AffWAut f) {
  f.ell = q_frac(f.ell);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) f.k[i][j].c0 = rat_frac(f.k[i][j].c0);
  return f;
}

AffWAut aff_compose(const AffWAut& f, const AffWAut& g) {
  AffWAut r;
  r.f = f.f * g.f;
  r.w = to_q(f.f) * g.w + f.w;
  r.ell = g.ell + row_times(f.ell, g.f);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      r.k[i][j] = kappa_add(
          g.k[i][j], kappa_pull(f.k[i][j], g.f, g.w, Int(2 * i), Int(2 * j)));
  return aff_canonical(r);
}

AffWAut aff_inverse(const AffWAut& f) {
  MatZ fi;
  try {
    fi = mat_to_z(inverse(f.f));
  } catch (const std::invalid_argument&) {
    throw std::logic_error(
        "aff_inverse: base matrix is not invertible over the integers");
  }
  AffWAut r;
  r.f = fi;
  r.w = -(to_q(fi) * f.w);
  r.ell = -row_times(f.ell, fi);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      r.k[i][j] =
          kappa_neg(kappa_pull(f.k[i][j], fi, r.w, Int(2 * i), Int(2 * j)));
  return aff_canonical(r);
}

AffWAut aff_basic(const Lattice& lat, const VecQ& a, const MatZ& f,
                  const MatZ& b) {
  std::size_t r = lat.rank();
  AffWAut out;
  out.f = f;
  out.w = a;
  out.ell = -row_times(to_q(lat.j) * a, f);
  MatQ bq = to_q(b);
  for (int j = 0; j < 2; ++j) {
    out.k[0][j] = kappa_zero(r);
    out.k[0][j].p = bq;
    out.k[1][j] = kappa_zero(r);
    out.k[1][j].p = -bq;
  }
  return aff_canonical(out);
}

TeePm aff_p0(const AffWAut& f, const TeePm& x) {
  Rational s(x.eps > 0 ? 0 : 2);
  return TeePm{to_q(f.f) * x.x + f.w.scaled(s), x.eps};
}

FibElt aff_p1(const AffWAut& f, const FibElt& z) {
  return FibElt{f.f * z.m, z.z * phase_scalar(dot(f.ell, to_q(z.m)))};
}

FibElt aff_kappa(const AffWAut& f, const TeePm& x, const TeePm& y) {
  Rational v = kappa_value(f.k[sheet(x.eps)][sheet(y.eps)], x.x, y.x);
  return FibElt{VecZ::zero(f.f.rows()), phase_scalar(v)};
}

EtaDesc eta_make(VecZ a, MatQ q, VecQ l, VecQ m, Rational c) {
  return EtaDesc{std::move(a), symmetrized(q), std::move(l), std::move(m),
                 rat_frac(c)};
}

EtaDesc eta_zero(std::size_t rank) {
  return EtaDesc{VecZ::zero(rank), MatQ(rank, rank), VecQ::zero(rank),
                 VecQ::zero(rank), Rational(0)};
}

FibElt eta_value(const EtaDesc& e, const TeePm& x) {
  Rational ph = dot(x.x, e.q * x.x) + dot(e.l, x.x);
  VecZ m = VecZ::zero(e.a.size());
  if (x.eps < 0) {
    ph -= dot(e.m, x.x) + e.c;
    m = -e.a;
  }
  return FibElt{m, phase_scalar(ph)};
}

EtaDesc eta_mul(const EtaDesc& a, const EtaDesc& b) {
  VecQ tb = to_q(b.a);
  VecQ qa_tb = a.q * tb;
  return eta_make(a.a + b.a, a.q + b.q, a.l + b.l,
                  a.m + b.m - qa_tb.scaled(Rational(2)),
                  a.c + b.c - dot(a.l, tb) - dot(tb, qa_tb) + dot(a.m, tb));
}

EtaDesc eta_inv(const EtaDesc& a) {
  VecQ ta = to_q(a.a);
  VecQ qa_ta = a.q * ta;
  return eta_make(-a.a, -a.q, -a.l, -a.m - qa_ta.scaled(Rational(2)),
                  -a.c - dot(a.l, ta) + dot(ta, qa_ta) + dot(a.m, ta));
}

AffWAut eta_delta(const Lattice& lat, const EtaDesc& e) {
  if (!half_integral(e.q))
    throw std::logic_error("eta_delta: quadratic part is not half-integral");
  std::size_t r = e.a.size();
  AffWAut d = aff_identity(r);
  d.w = to_q(e.a).scaled(Rational(1, 2));
  d.ell = diagonal(e.q) + e.l;
  MatQ twoq = e.q.scaled(Rational(2));
  VecQ ly_minus = e.m - e.l.scaled(Rational(2)) + to_q(lat.j_sharp(e.a));
  d.k[0][0].p = twoq;
  d.k[0][1].p = twoq;
  d.k[0][1].lx = -e.m;
  d.k[1][0].p = -twoq;
  d.k[1][0].ly = ly_minus;
  d.k[1][1].p = -twoq;
  d.k[1][1].lx = e.m;
  d.k[1][1].ly = ly_minus;
  d.k[1][1].c0 = e.c * 2;
  return aff_canonical(d);
}

EtaDesc eta_act(const EtaDesc& e, const AffWAut& f) {
  AffWAut fi = aff_inverse(f);
  std::size_t r = e.a.size();
  VecQ ta = to_q(e.a);
  MatQ fq = to_q(f.f);
  MatQ ft = fq.transposed();

  if (rat_frac(fi.k[0][0].c0) != 0)
    throw std::logic_error("eta_act: transported map left the family");

  VecZ a2 = fi.f * e.a;
  MatQ q2 = symmetrized(ft * e.q * fq);
  VecQ l2 = row_times(e.l, f.f) + row_times(fi.k[0][0].lx, f.f);

  const KappaQuad& km = fi.k[1][0];
  VecQ rx = row_times(e.l - e.m, f.f) +
            (ft * (e.q * f.w)).scaled(Rational(4)) - ft * (km.p * ta) +
            row_times(km.lx, f.f);
  Rational cc = dot(f.w, e.q * f.w) * 4 + dot(e.l, f.w) * 2 -
                dot(e.m, f.w) * 2 - e.c - dot(fi.ell, ta) -
                dot(f.w, km.p * ta) * 2 + dot(km.lx, f.w) * 2 -
                dot(km.ly, ta) + km.c0;

  EtaDesc out = eta_make(a2, q2, l2, l2 - rx, -cc);

  // The formula above is checked against the defining transport on a
  // fixed grid of points; a mismatch means the result does not lie in
  // the descriptor family after all.
  std::vector<TeePm> pts;
  for (int eps : {1, -1}) {
    pts.push_back(TeePm{VecQ::zero(r), eps});
    for (std::size_t i = 0; i < r; ++i) {
      pts.push_back(TeePm{to_q(VecZ::unit(r, i)), eps});
      pts.push_back(TeePm{to_q(VecZ::unit(r, i)).scaled(Rational(1, 3)), eps});
    }
    VecQ mixed(r);
    for (std::size_t i = 0; i < r; ++i)
      mixed[i] = Rational(i % 2 ? -1 : 1, 5 + static_cast<long long>(i));
    pts.push_back(TeePm{mixed, eps});
  }
  for (const TeePm& p : pts) {
    TeePm u = aff_p0(f, p);
    FibElt ev = eta_value(e, u);
    FibElt lhs = aff_p1(fi, ev);
    FibElt kv = aff_kappa(fi, u, TeePm{to_q(ev.m), 1});
    FibElt want{lhs.m + kv.m, lhs.z * kv.z};
    FibElt got = eta_value(out, p);
    if (!(got == want))
      throw std::logic_error("eta_act: closed form disagrees with transport");
  }
  return out;
}

namespace {

WeakMorphism aff_weak_body(const XMod& theta_prime, const AffWAut& f) {
  WeakMorphism wm;
  wm.src = theta_prime;
  wm.tgt = theta_prime;
  wm.p0 = [f](const Elt& x) {
    return Elt::of<TeePm>(aff_p0(f, x.as<TeePm>()));
  };
  wm.p1 = [f](const Elt& z) {
    return Elt::of<FibElt>(aff_p1(f, z.as<FibElt>()));
  };
  wm.kappa = [f](const Elt& x, const Elt& y) {
    return Elt::of<FibElt>(aff_kappa(f, x.as<TeePm>(), y.as<TeePm>()));
  };
  return wm;
}

}  // namespace

WeakMorphism aff_to_weak(const XMod& theta_prime, const AffWAut& f) {
  WeakMorphism wm = aff_weak_body(theta_prime, f);
  wm.inverse = std::make_shared<const WeakMorphism>(
      aff_weak_body(theta_prime, aff_inverse(f)));
  return wm;
}

namespace {

EtaDesc sample_eta(Rng& rng, std::size_t r) {
  MatZ s(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i; j < r; ++j) {
      Int v = rng.int_(2);
      s.at(i, j) = v;
      s.at(j, i) = v;
    }
  return eta_make(rng.vec_z(r, 2), to_q(s).scaled(Rational(1, 2)),
                  rng.vec_q(r, 2, 8), rng.vec_q(r, 2, 8), rng.rat(2, 8));
}

MatZ sample_twist(const Lattice& lat, const MatZ& f, Rng& rng) {
  MatZ c = lat.j - f.transposed() * lat.j * f;
  MatZ b = strict_lower(c);
  std::size_t r = lat.rank();
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i; j < r; ++j) {
      Int v = rng.int_(1);
      b.at(i, j) = b.at(i, j) + v;
      if (j > i) b.at(j, i) = b.at(j, i) + v;
    }
  return b;
}

}  // namespace

XMod wact_theta_prime(const Lattice& lat) {
  std::size_t r = lat.rank();
  auto isos = std::make_shared<std::vector<MatZ>>(isometry_group(lat));

  Group base;
  base.name = "wAut(Theta'_" + lat.name + ")";
  base.id = Elt::of<AffWAut>(aff_identity(r));
  base.mul = [](const Elt& a, const Elt& b) {
    return Elt::of<AffWAut>(aff_compose(a.as<AffWAut>(), b.as<AffWAut>()));
  };
  base.inv = [](const Elt& a) {
    return Elt::of<AffWAut>(aff_inverse(a.as<AffWAut>()));
  };
  base.eq = [](const Elt& a, const Elt& b) {
    return a.as<AffWAut>() == b.as<AffWAut>();
  };
  base.sample = [lat, isos, r](Rng& rng) {
    const MatZ& f = (*isos)[static_cast<std::size_t>(
        rng.int_in(0, static_cast<long long>(isos->size()) - 1))];
    AffWAut g = aff_basic(lat, rng.vec_q(r, 3, 12), f, sample_twist(lat, f, rng));
    return Elt::of<AffWAut>(
        aff_compose(g, eta_delta(lat, sample_eta(rng, r))));
  };
  base.show = [](const Elt& a) { return show(a.as<AffWAut>()); };

  Group fiber;
  fiber.name = base.name + ".homotopies";
  fiber.id = Elt::of<EtaDesc>(eta_zero(r));
  fiber.mul = [](const Elt& a, const Elt& b) {
    return Elt::of<EtaDesc>(eta_mul(a.as<EtaDesc>(), b.as<EtaDesc>()));
  };
  fiber.inv = [](const Elt& a) {
    return Elt::of<EtaDesc>(eta_inv(a.as<EtaDesc>()));
  };
  fiber.eq = [](const Elt& a, const Elt& b) {
    return a.as<EtaDesc>() == b.as<EtaDesc>();
  };
  fiber.sample = [r](Rng& rng) { return Elt::of<EtaDesc>(sample_eta(rng, r)); };
  fiber.show = [](const Elt& a) { return show(a.as<EtaDesc>()); };

  XMod xm;
  xm.name = "wAct(Theta'_" + lat.name + ")";
  xm.base = base;
  xm.fiber = fiber;
  xm.act = [](const Elt& e, const Elt& f) {
    return Elt::of<EtaDesc>(eta_act(e.as<EtaDesc>(), f.as<AffWAut>()));
  };
  xm.bnd = [lat](const Elt& e) {
    return Elt::of<AffWAut>(eta_delta(lat, e.as<EtaDesc>()));
  };
  return xm;
}

std::string show(const AffWAutT& f) {
  std::ostringstream os;
  os << "f=" << show(f.f) << " ell=" << show(f.ell) << " k={p=" << show(f.k.p)
     << " lx=" << show(f.k.lx) << " ly=" << show(f.k.ly)
     << " c0=" << show(f.k.c0) << "}";
  return os.str();
}

std::string show(const EtaDescT& e) {
  return "q=" + show(e.q) + " l=" + show(e.l);
}

AffWAutT aff_identity_t(std::size_t rank) {
  return AffWAutT{MatZ::identity(rank), VecQ::zero(rank), kappa_zero(rank)};
}

AffWAutT aff_canonical_t(AffWAutT f) {
  f.ell = q_frac(f.ell);
  f.k.c0 = rat_frac(f.k.c0);
  return f;
}

AffWAutT aff_compose_t(const AffWAutT& f, const AffWAutT& g) {
  std::size_t r = g.f.rows();
  AffWAutT out;
  out.f = f.f * g.f;
  out.ell = g.ell + row_times(f.ell, g.f);
  out.k = kappa_add(g.k, kappa_pull(f.k, g.f, VecQ::zero(r), Int(0), Int(0)));
  return aff_canonical_t(out);
}

AffWAutT aff_inverse_t(const AffWAutT& f) {
  MatZ fi;
  try {
    fi = mat_to_z(inverse(f.f));
  } catch (const std::invalid_argument&) {
    throw std::logic_error(
        "aff_inverse_t: base matrix is not invertible over the integers");
  }
  std::size_t r = f.f.rows();
  AffWAutT out;
  out.f = fi;
  out.ell = -row_times(f.ell, fi);
  out.k = kappa_neg(kappa_pull(f.k, fi, VecQ::zero(r), Int(0), Int(0)));
  return aff_canonical_t(out);
}

AffWAutT aff_basic_t(const Lattice& lat, const MatZ& f, const MatZ& b) {
  AffWAutT out;
  out.f = f;
  out.ell = VecQ::zero(lat.rank());
  out.k = kappa_zero(lat.rank());
  out.k.p = to_q(b);
  return out;
}

VecQ aff_p0_t(const AffWAutT& f, const VecQ& x) { return to_q(f.f) * x; }

FibElt aff_p1_t(const AffWAutT& f, const FibElt& z) {
  return FibElt{f.f * z.m, z.z * phase_scalar(dot(f.ell, to_q(z.m)))};
}

FibElt aff_kappa_t(const AffWAutT& f, const VecQ& x, const VecQ& y) {
  return FibElt{VecZ::zero(f.f.rows()), phase_scalar(kappa_value(f.k, x, y))};
}

EtaDescT eta_make_t(MatQ q, VecQ l) {
  return EtaDescT{symmetrized(q), std::move(l)};
}

EtaDescT eta_zero_t(std::size_t rank) {
  return EtaDescT{MatQ(rank, rank), VecQ::zero(rank)};
}

FibElt eta_value_t(const EtaDescT& e, const VecQ& x) {
  return FibElt{VecZ::zero(e.l.size()),
                phase_scalar(dot(x, e.q * x) + dot(e.l, x))};
}

AffWAutT eta_delta_t(const EtaDescT& e) {
  if (!half_integral(e.q))
    throw std::logic_error("eta_delta_t: quadratic part is not half-integral");
  std::size_t r = e.l.size();
  AffWAutT d = aff_identity_t(r);
  d.ell = diagonal(e.q) + e.l;
  d.k.p = e.q.scaled(Rational(2));
  return aff_canonical_t(d);
}

EtaDescT eta_act_t(const EtaDescT& e, const AffWAutT& f) {
  AffWAutT fi = aff_inverse_t(f);
  std::size_t r = e.l.size();
  if (rat_frac(fi.k.c0) != 0)
    throw std::logic_error("eta_act_t: transported map left the family");
  MatQ fq = to_q(f.f);
  EtaDescT out = eta_make_t(fq.transposed() * e.q * fq,
                            row_times(e.l, f.f) + row_times(fi.k.lx, f.f));

  std::vector<VecQ> pts;
  pts.push_back(VecQ::zero(r));
  for (std::size_t i = 0; i < r; ++i) {
    pts.push_back(to_q(VecZ::unit(r, i)));
    pts.push_back(to_q(VecZ::unit(r, i)).scaled(Rational(1, 3)));
  }
  VecQ mixed(r);
  for (std::size_t i = 0; i < r; ++i)
    mixed[i] = Rational(i % 2 ? -1 : 1, 5 + static_cast<long long>(i));
  pts.push_back(mixed);
  for (const VecQ& p : pts) {
    VecQ u = aff_p0_t(f, p);
    FibElt lhs = aff_p1_t(fi, eta_value_t(e, u));
    FibElt kv = aff_kappa_t(fi, u, VecQ::zero(r));
    FibElt want{lhs.m + kv.m, lhs.z * kv.z};
    if (!(eta_value_t(out, p) == want))
      throw std::logic_error("eta_act_t: closed form disagrees with transport");
  }
  return out;
}

namespace {

WeakMorphism aff_weak_body_t(const XMod& theta, const AffWAutT& f) {
  WeakMorphism wm;
  wm.src = theta;
  wm.tgt = theta;
  wm.p0 = [f](const Elt& x) { return Elt::of<VecQ>(aff_p0_t(f, x.as<VecQ>())); };
  wm.p1 = [f](const Elt& z) {
    return Elt::of<FibElt>(aff_p1_t(f, z.as<FibElt>()));
  };
  wm.kappa = [f](const Elt& x, const Elt& y) {
    return Elt::of<FibElt>(aff_kappa_t(f, x.as<VecQ>(), y.as<VecQ>()));
  };
  return wm;
}

EtaDescT sample_eta_t(Rng& rng, std::size_t r) {
  MatZ s(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i; j < r; ++j) {
      Int v = rng.int_(2);
      s.at(i, j) = v;
      s.at(j, i) = v;
    }
  return eta_make_t(to_q(s).scaled(Rational(1, 2)), rng.vec_q(r, 2, 8));
}

}  // namespace

WeakMorphism aff_to_weak_t(const XMod& theta, const AffWAutT& f) {
  WeakMorphism wm = aff_weak_body_t(theta, f);
  wm.inverse = std::make_shared<const WeakMorphism>(
      aff_weak_body_t(theta, aff_inverse_t(f)));
  return wm;
}

XMod wact_theta(const Lattice& lat) {
  std::size_t r = lat.rank();
  auto isos = std::make_shared<std::vector<MatZ>>(isometry_group(lat));

  Group base;
  base.name = "wAut(Theta_" + lat.name + ")";
  base.id = Elt::of<AffWAutT>(aff_identity_t(r));
  base.mul = [](const Elt& a, const Elt& b) {
    return Elt::of<AffWAutT>(aff_compose_t(a.as<AffWAutT>(), b.as<AffWAutT>()));
  };
  base.inv = [](const Elt& a) {
    return Elt::of<AffWAutT>(aff_inverse_t(a.as<AffWAutT>()));
  };
  base.eq = [](const Elt& a, const Elt& b) {
    return a.as<AffWAutT>() == b.as<AffWAutT>();
  };
  base.sample = [lat, isos, r](Rng& rng) {
    const MatZ& f = (*isos)[static_cast<std::size_t>(
        rng.int_in(0, static_cast<long long>(isos->size()) - 1))];
    AffWAutT g = aff_basic_t(lat, f, sample_twist(lat, f, rng));
    return Elt::of<AffWAutT>(aff_compose_t(g, eta_delta_t(sample_eta_t(rng, r))));
  };
  base.show = [](const Elt& a) { return show(a.as<AffWAutT>()); };

  Group fiber;
  fiber.name = base.name + ".homotopies";
  fiber.id = Elt::of<EtaDescT>(eta_zero_t(r));
  fiber.mul = [](const Elt& a, const Elt& b) {
    const auto& u = a.as<EtaDescT>();
    const auto& v = b.as<EtaDescT>();
    return Elt::of<EtaDescT>(eta_make_t(u.q + v.q, u.l + v.l));
  };
  fiber.inv = [](const Elt& a) {
    const auto& u = a.as<EtaDescT>();
    return Elt::of<EtaDescT>(eta_make_t(-u.q, -u.l));
  };
  fiber.eq = [](const Elt& a, const Elt& b) {
    return a.as<EtaDescT>() == b.as<EtaDescT>();
  };
  fiber.sample = [r](Rng& rng) {
    return Elt::of<EtaDescT>(sample_eta_t(rng, r));
  };
  fiber.show = [](const Elt& a) { return show(a.as<EtaDescT>()); };

  XMod xm;
  xm.name = "wAct(Theta_" + lat.name + ")";
  xm.base = base;
  xm.fiber = fiber;
  xm.act = [](const Elt& e, const Elt& f) {
    return Elt::of<EtaDescT>(eta_act_t(e.as<EtaDescT>(), f.as<AffWAutT>()));
  };
  xm.bnd = [](const Elt& e) {
    return Elt::of<AffWAutT>(eta_delta_t(e.as<EtaDescT>()));
  };
  return xm;
}

}  // namespace cattorus
