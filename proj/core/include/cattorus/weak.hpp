#pragma once

// Weak automorphism 2-groups of Theta and Theta'. Instead of carrying
// arbitrary closures, every object here is a finite exact descriptor:
//
//   AffWAut    p0(x,e) = (f x + (1-e) w, e)
//              p1(m,z) = (f m, z e[ell.m])
//              kappa((x,e),(y,d)) = (0, e[x^T P y + lx.x + ly.y + c0])
//                                   with one (P,lx,ly,c0) per sign sector
//
//   EtaDesc    eta(x,e) = (v A, e[x^T Q x + L x + v(M x + c)]),
//              v = (e-1)/2, with 2Q integral
//
// and composition, inverse, boundary and the action of automorphisms on
// homotopies are implemented as closed-form descriptor arithmetic, so
// comparisons are exact equalities of rational data. The T-suffixed
// variants are the same families over Theta, where the sign sheet and
// the translation part collapse.

#include <array>

#include "cattorus/cattorus.hpp"
#include "cattorus/xmod.hpp"

namespace cattorus {

// One sector of a quadratic 2-cochain on the base.
struct KappaQuad {
  MatQ p;
  VecQ lx;
  VecQ ly;
  Rational c0;
  bool operator==(const KappaQuad&) const = default;
};

KappaQuad kappa_zero(std::size_t rank);
Rational kappa_value(const KappaQuad& k, const VecQ& x, const VecQ& y);

// Pullback along the pair of affine maps x -> g x + s wg, y -> g y + t wg.
KappaQuad kappa_pull(const KappaQuad& k, const MatZ& g, const VecQ& wg,
                     const Int& s, const Int& t);
KappaQuad kappa_add(const KappaQuad& a, const KappaQuad& b);
KappaQuad kappa_neg(const KappaQuad& a);

struct AffWAut {
  MatZ f;
  VecQ w;
  VecQ ell;
  // sector [ix][iy], index 0 for e = +1 and 1 for e = -1
  std::array<std::array<KappaQuad, 2>, 2> k;
  bool operator==(const AffWAut&) const = default;
};

struct EtaDesc {
  VecZ a;
  MatQ q;
  VecQ l;
  VecQ m;
  Rational c;
  bool operator==(const EtaDesc&) const = default;
};

std::string show(const AffWAut& f);
std::string show(const EtaDesc& e);

AffWAut aff_identity(std::size_t rank);
AffWAut aff_canonical(AffWAut f);
AffWAut aff_compose(const AffWAut& f, const AffWAut& g);  // f after g
AffWAut aff_inverse(const AffWAut& f);

// Translation by a composed with an isometry f twisted by an integral
// form b with b - b^T = J - f*J; the generating weak automorphisms.
AffWAut aff_basic(const Lattice& lat, const VecQ& a, const MatZ& f,
                  const MatZ& b);

TeePm aff_p0(const AffWAut& f, const TeePm& x);
FibElt aff_p1(const AffWAut& f, const FibElt& z);
FibElt aff_kappa(const AffWAut& f, const TeePm& x, const TeePm& y);

EtaDesc eta_make(VecZ a, MatQ q, VecQ l, VecQ m, Rational c);
EtaDesc eta_zero(std::size_t rank);
FibElt eta_value(const EtaDesc& e, const TeePm& x);
EtaDesc eta_mul(const EtaDesc& a, const EtaDesc& b);
EtaDesc eta_inv(const EtaDesc& a);

// Boundary: the automorphism whose p0 shifts by the coweight of eta.
AffWAut eta_delta(const Lattice& lat, const EtaDesc& e);

// Right action eta^F; throws if the transported map leaves the family,
// and cross-checks the descriptor against the defining formula.
EtaDesc eta_act(const EtaDesc& e, const AffWAut& f);

WeakMorphism aff_to_weak(const XMod& theta_prime, const AffWAut& f);

XMod wact_theta_prime(const Lattice& lat);

// The same structure over Theta: no sign sheet, no translation part.
struct AffWAutT {
  MatZ f;
  VecQ ell;
  KappaQuad k;
  bool operator==(const AffWAutT&) const = default;
};

struct EtaDescT {
  MatQ q;
  VecQ l;
  bool operator==(const EtaDescT&) const = default;
};

std::string show(const AffWAutT& f);
std::string show(const EtaDescT& e);

AffWAutT aff_identity_t(std::size_t rank);
AffWAutT aff_canonical_t(AffWAutT f);
AffWAutT aff_compose_t(const AffWAutT& f, const AffWAutT& g);
AffWAutT aff_inverse_t(const AffWAutT& f);
AffWAutT aff_basic_t(const Lattice& lat, const MatZ& f, const MatZ& b);

VecQ aff_p0_t(const AffWAutT& f, const VecQ& x);
FibElt aff_p1_t(const AffWAutT& f, const FibElt& z);
FibElt aff_kappa_t(const AffWAutT& f, const VecQ& x, const VecQ& y);

EtaDescT eta_make_t(MatQ q, VecQ l);
EtaDescT eta_zero_t(std::size_t rank);
FibElt eta_value_t(const EtaDescT& e, const VecQ& x);

AffWAutT eta_delta_t(const EtaDescT& e);
EtaDescT eta_act_t(const EtaDescT& e, const AffWAutT& f);

WeakMorphism aff_to_weak_t(const XMod& theta, const AffWAutT& f);

XMod wact_theta(const Lattice& lat);

}  // namespace cattorus
