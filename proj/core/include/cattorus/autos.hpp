#pragma once

/* Automorphisms of the categorical tori.
 *
 * An isometry f of (Lam, I) does not preserve the chosen half J of the
 * Gram matrix; the discrepancy J - f*J is an integral bilinear form that
 * has to travel with f.  Pairs (f, B) with B - B^t = J - f*J multiply by
 * (f, B)(g, C) = (fg, g*B + C) and form an extension O~ of the isometry
 * group by the symmetric forms.  Dividing out the even symmetric forms
 * leaves a finite group E, and the squaring maps lam -> [lam (x) lam]
 * assemble into crossed modules over these bases: xi over E, its
 * resolution xi~ over O~, and on the flip-extended side xi' over T x| E
 * and xi~' over t x| O~, fibred over the two-step coweight cover.
 *
 * The point of the module is the pair of comparison morphisms into the
 * weak automorphism crossed modules: a strict one out of xi~, and a
 * weak one (with explicit kappa) out of xi~'.  The report functions
 * exercise both, together with the finite two-torsion model of E and
 * the adjoint sequence of the reflection torus. */

#include <cstdint>
#include <string>

#include "cattorus/lattice.hpp"
#include "cattorus/weak.hpp"
#include "cattorus/xmod.hpp"

namespace cattorus {

// B(f., f.)
MatZ form_pullback(const MatZ& f, const MatZ& b);

bool is_symmetric(const MatZ& b);
// symmetric with even diagonal; these act trivially on every theta datum
bool is_even_symmetric(const MatZ& b);

struct OTildeElt {
  MatZ f;
  MatZ b;
  bool operator==(const OTildeElt&) const = default;
};

std::string show(const OTildeElt& u);

// Throws std::invalid_argument unless b - b^t = J - f*J.
OTildeElt otilde_make(const Lattice& lat, MatZ f, MatZ b);
// Validates both factors like otilde_make before multiplying.
OTildeElt otilde_mul(const Lattice& lat, const OTildeElt& u,
                     const OTildeElt& v);
OTildeElt otilde_inv(const Lattice& lat, const OTildeElt& u);

// The preferred lift of an isometry: B is the strictly lower triangle of
// J - f*J, zeros on and above the diagonal.
OTildeElt otilde_section(const Lattice& lat, const MatZ& f);

/* Classes modulo even symmetric forms remember exactly the skew part of
 * b and its diagonal mod 2.  The canonical representative stores the
 * skew part below the diagonal and a 0/1 diagonal. */
MatZ eaut_reduce(const MatZ& b);

struct EAutElt {
  MatZ f;
  MatZ b;
  bool operator==(const EAutElt&) const = default;
};

std::string show(const EAutElt& u);

EAutElt eaut_class(const OTildeElt& u);
EAutElt eaut_mul(const EAutElt& u, const EAutElt& v);
EAutElt eaut_inv(const EAutElt& u);

Group otilde_group(const Lattice& lat);
Group eaut_group(const Lattice& lat);

// fiber of xi~: lam together with a symmetric witness of its parity,
// diag(b) = lam mod 2
struct LamGam {
  VecZ lam;
  MatZ b;
  bool operator==(const LamGam&) const = default;
};

/* fiber of xi~': a coweight cover element (n, iota) twisted by
 * j(n, n') mod 2, carrying a symmetric s with diag(s) = I#(n) mod 2 */
struct CovGam {
  VecZ n;
  int iota = 0;
  MatZ s;
  bool operator==(const CovGam&) const = default;
};

// the same reduced mod 2Lam and even forms: 0/1 entries, s dropped
struct CovMod2 {
  VecZ n;
  int iota = 0;
  bool operator==(const CovMod2&) const = default;
};

// base of xi~': a translation of t followed by an O~ twist
struct TeeOTilde {
  VecQ a;
  MatZ f;
  MatZ b;
  bool operator==(const TeeOTilde&) const = default;
};

// base of xi': torus translation in [0,1)^r with a reduced E part
struct TeeEAut {
  VecQ t;
  MatZ f;
  MatZ b;
  bool operator==(const TeeEAut&) const = default;
};

std::string show(const LamGam& e);
std::string show(const CovGam& e);
std::string show(const CovMod2& e);
std::string show(const TeeOTilde& u);
std::string show(const TeeEAut& u);

// Validating constructors for the fibred products.
LamGam lamgam_make(VecZ lam, MatZ b);
CovGam covgam_make(const Lattice& lat, VecZ n, int iota, MatZ s);

XMod make_xi(const Lattice& lat);
XMod make_xi_tilde(const Lattice& lat);
XMod make_xi_prime(const Lattice& lat);
XMod make_xi_tilde_prime(const Lattice& lat);

/* Strict comparison xi~ -> wAct(Theta): (f, b) becomes the twist
 * automorphism with quadratic sector b, and (lam, b) the homotopy with
 * hessian b/2 and slope -lam/2.  The boundary squares commute on the
 * nose because diag(b) = lam mod 2. */
StrictMor theta_comparison(const Lattice& lat);

/* Weak comparison xi~' -> wAct(Theta').  kappa records how a carried
 * form B reacts to the second factor's translation b:
 *   kappa(u, v)(x, eps) = [eps B(gx, b) - B(b, gx) + (eps - 1) B(b, b)]
 * with g, b read off v.  It vanishes whenever v does not translate. */
WeakMorphism theta_prime_comparison(const Lattice& lat);

// The translation-free class of lam: p1(m, [r]) = (m, [r + lam(m)/2]).
// eta_delta of the pure hessian b/2 lands on its composite with the
// quadratic-sector twist of b, for lam = diag(b).
AffWAut lambda_coboundary(const Lattice& lat, const VecZ& lam);

// Axioms for xi~ and xi, the strict comparison, weak checks for sampled
// basic twists, and the kernel/cokernel bookkeeping of the squaring map.
// Enumeration parts need rank <= 4.
Report xi_equivalence_check(const Lattice& lat, std::uint64_t seed,
                            int trials);

// Axioms for xi~' and xi', the weak comparison with its kappa cocycle,
// the coboundary identity for lambda_coboundary, the sign character on
// the fiber kernel, and outer-class counting.  Rank <= 4.
Report xi_prime_equivalence_check(const Lattice& lat, std::uint64_t seed,
                                  int trials);

/* Finite model at two-torsion: pairs (f, c) of an automorphism of the
 * half-norm form on Lam/2Lam and a cochain with dc = J + f*J mod 2,
 * compared against the full automorphism group of the two-torsion cover
 * and against E as a pullback.  Needs I unimodular and rank <= 4. */
Report unimodular_eprime_check(const Lattice& lat, std::uint64_t seed,
                               int trials);

// Squaring and conjugation in T x| {+-1}: two-torsion kernel, order-two
// reflections, and the affine shape of the adjoint action.
Report ad_sequence_check(const Lattice& lat, std::uint64_t seed, int trials);

}  // namespace cattorus
