#pragma once

// Conjugation data of a crossed module: crossed homomorphisms from the
// base to the fiber, the inner morphisms they bound, the centre of
// Theta, and centralisers of strict morphisms.

#include <functional>
#include <string>
#include <vector>

#include "cattorus/cattorus.hpp"
#include "cattorus/xmod.hpp"

namespace cattorus {

// chi: base -> fiber with chi(xy) = chi(x)^y * chi(y).
using Cross = std::function<Elt(const Elt&)>;

CheckResult cross_law_check(const XMod& xm, const Cross& chi,
                            std::uint64_t seed, int trials,
                            const std::string& id);

// (a * b)(x) = b(x) * a(x * bnd(b(x))), the vertical composite.
Cross cross_mul(const XMod& xm, const Cross& a, const Cross& b);

// x -> x * bnd(chi(x)) on the base, alpha -> alpha * chi(bnd alpha) on
// the fiber. Endomorphism of xm; an automorphism when chi is invertible.
StrictMor cross_delta(const XMod& xm, const Cross& chi);

// Conjugation by a base element: y -> x y x^{-1}, alpha -> alpha^{x^{-1}}.
StrictMor ad0(const XMod& xm, const Elt& x);

// The crossed homomorphism x -> alpha^x * alpha^{-1} bounded by alpha.
Cross ad1(const XMod& xm, const Elt& alpha);

// Centre of Theta. Base elements are pairs (x, lam) with x in t and lam
// an integer functional; (x, lam) acts on arrow labels through x alone
// and the pair encodes the crossed homomorphism
//   y -> (0, e[(J_flat(x) + lam)(y)]).
struct CentreElt {
  VecQ x;
  VecZ lam;
  bool operator==(const CentreElt&) const = default;
};

std::string show(const CentreElt& c);

XMod centre_theta(const Lattice& lat, LabelKind kind = LabelKind::Circle);

Cross centre_cross(const XMod& theta, const Lattice& lat, const CentreElt& c,
                   LabelKind kind = LabelKind::Circle);

// Recovers, for each fiber generator (e_k, 1), the pair (x, lam) from
// conjugation data alone by solving e[c . y] = phase of (alpha^{-1})^y
// alpha at probe points y, then compares against the boundary of
// centre_theta and checks delta(centre_cross) = ad0(x^{-1}) on samples.
Report centre_structure_check(const Lattice& lat, std::uint64_t seed,
                              int trials);

// Centraliser of a strict morphism f. Elements are pairs (h, chi) with
// h in the target base and chi from the source base to the target fiber
// subject to
//   bnd(chi(s))   = f0(s)^{-1} h^{-1} f0(s) h
//   chi(bnd a)    = f1(a)^{-1} * f1(a)^h
//   chi(st)       = chi(s)^{f0(t)} * chi(t).
// chi is compared extensionally at the probe points.
struct CentrElt {
  Elt h;
  std::function<Elt(const Elt&)> chi;
};

XMod make_centraliser(const std::string& name, const StrictMor& f,
                      std::function<CentrElt(Rng&)> sample,
                      std::vector<Elt> probes);

// The three membership laws above, sampled.
Report centraliser_member_check(const StrictMor& f, const CentrElt& m,
                                std::uint64_t seed, int trials,
                                const std::string& id_prefix);

// (s, xi) in the centre of the source maps to (f0(s), f1 after xi).
CentrElt centre_image(const StrictMor& f, const Elt& s, const Cross& xi);

// For the identity morphism of Theta the centraliser is the centre:
// checks that centre elements land in C(id) and multiply compatibly.
Report centraliser_of_identity_check(const Lattice& lat, std::uint64_t seed,
                                     int trials);

}  // namespace cattorus
