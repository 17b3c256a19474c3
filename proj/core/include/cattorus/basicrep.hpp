#pragma once

// The basic representation of Theta' and its centraliser. The target
// crossed module has trivial boundary: base the translation-and-inversion
// automorphisms of the rational torus, fiber the monomial units c*e[w].
// The centraliser of r_bas is then matched against the extraspecial
// double cover of the coweight lattice.

#include <string>

#include "cattorus/actor.hpp"
#include "cattorus/cattorus.hpp"
#include "cattorus/xmod.hpp"

namespace cattorus {

// The map s -> exp(t) * s^eps; t is kept reduced to [0,1)^r.
struct TorusAut {
  VecQ t;
  int eps = 1;
  bool operator==(const TorusAut&) const = default;
};

// The unit c * e[w . s] with exact coefficient and integral weight.
struct LaurentUnit {
  Scalar coeff;
  VecZ weight;
  bool operator==(const LaurentUnit&) const = default;
};

std::string show(const TorusAut& a);
std::string show(const LaurentUnit& u);

// TorusAut acts on units by precomposition,
//   (c, w)^(t, eps) = (c * e[w(t)], eps * w),
// and every unit bounds the identity automorphism.
XMod make_rep_target(const Lattice& lat);

// Level k, weight n:
//   r1(m, z) = (z^{kn}, k * J_sharp(m)),   r0(x, eps) = (exp(nx), eps).
struct RepHom {
  Int k;
  Int n;
  StrictMor hom;
};

RepHom make_rep(const Lattice& lat, const Int& k, const Int& n);

// Strict-morphism axioms for r_{k,n}; the restriction to scalar labels
// is z -> z^{kn}; when J is asymmetric, corrupting the weight of r1
// from J_sharp to J_flat must break equivariance within 200 trials.
Report verify_rep(const Lattice& lat, const RepHom& rep, std::uint64_t seed,
                  int trials);

// The pair (exp(n/2), chi_{(n,iota)}) with
//   chi(x, eps) = (e[J(x,n)/2 + iota(1-eps)/4], (eps-1)/2 * J_flat(n)),
// a member of the centraliser of r_bas.
CentrElt centralizer_member(const Lattice& lat, const VecZ& n, int iota);

// C(r_bas), sampled as centralizer_member(n, iota) * bnd(unit).
XMod make_rep_centraliser(const Lattice& lat);

// F from the extraspecial double cover into C(r_bas):
//   F1(m, z) = (z, -J_flat(m)),   F0(n, iota) = centralizer_member.
StrictMor extraspecial_to_centraliser(const Lattice& lat);

// The centraliser theorem, machine half: F is a strict morphism, its
// images satisfy the membership laws, scalar labels map bijectively
// onto the weight-zero units, the 2^{rank+1} components enumerate
// pairwise distinct mod inner elements and exhaust the 2-torsion
// translations, and two corrupted variants of F each fail fast.
// Rank above 4 reports a skip (the component enumeration is 2^{rank+1}).
Report verify_centralizer_theorem(const Lattice& lat, std::uint64_t seed,
                                  int trials);

}  // namespace cattorus
