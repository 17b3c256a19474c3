#pragma once

// Categorical tori. From a lattice with half-Gram form J we build the
// crossed module Theta with base t = Q^r and fiber coweights x scalars,
// its extension Theta' over t x {+-1}, and the centraliser-side double
// cover of the coweight lattice whose quotient by doubled coweights is
// an extraspecial 2-group.

#include <string>
#include <vector>

#include "cattorus/lattice.hpp"
#include "cattorus/xmod.hpp"

namespace cattorus {

// Arrow label: coweight plus an invertible scalar.
struct FibElt {
  VecZ m;
  Scalar z;
  bool operator==(const FibElt& o) const { return m == o.m && z == o.z; }
};

// Element of t x {+-1}; eps is +1 or -1.
struct TeePm {
  VecQ x;
  int eps = 1;
  bool operator==(const TeePm& o) const { return x == o.x && eps == o.eps; }
};

// Element of the double cover of the coweight lattice; iota in {0,1}
// twists by the cocycle J(m', m) mod 2.
struct ExCov {
  VecZ m;
  int iota = 0;
  bool operator==(const ExCov& o) const { return m == o.m && iota == o.iota; }
};

// Same cocycle on the 2-torsion quotient: coordinates mod 2.
struct F2Cov {
  VecZ a;
  int iota = 0;
  bool operator==(const F2Cov& o) const { return a == o.a && iota == o.iota; }
};

std::string show(const FibElt& e);
std::string show(const TeePm& e);
std::string show(const ExCov& e);
std::string show(const F2Cov& e);

// Whether fiber sampling draws from U(1) only or from all of C^*.
enum class LabelKind { Circle, Cx };

Scalar phase_scalar(const Rational& r);
Scalar minus_one_to(const Int& k);

Group make_tee(const Lattice& lat);             // (Q^r, +)
Group make_tee_pm(const Lattice& lat);          // t x {+-1}
Group make_fiber(const Lattice& lat, LabelKind kind);
Group make_excov(const Lattice& lat);           // double cover of coweights
Group make_t2_cover(const Lattice& lat);        // its mod-2 quotient cover

// base t, fiber coweights x scalars, action twisting scalars by J(m, x)
XMod make_theta(const Lattice& lat, LabelKind kind = LabelKind::Circle);

// extension over t x {+-1}; eps = -1 acts by negating the coweight part
XMod make_theta_prime(const Lattice& lat, LabelKind kind = LabelKind::Circle);

// boundary doubles the coweight; the scalar component is forgotten
XMod make_extraspecial(const Lattice& lat);

// representatives of the 2-torsion of T = t / coweights, coords in {0, 1/2}
std::vector<VecQ> two_torsion(const Lattice& lat);

// pi0 of the extraspecial crossed module, fully enumerated
struct ExtraspecialData {
  std::vector<F2Cov> elements;
  std::vector<F2Cov> centre;
  std::vector<F2Cov> commutator_subgroup;
  std::string presentation;  // generators and relations, printable
};

ExtraspecialData extraspecial_group(const Lattice& lat);

}  // namespace cattorus
