#pragma once

/* The Poincare bundle pulled back to T x T: transition phases between
 * fiber trivializations, exact holonomy of the connection along piecewise
 * linear loops, the Looijenga grading of the inertia quotient, and theta
 * series with their weight refinements.
 *
 * Everything is exact.  Holonomy integrals reduce to closed forms because
 * both loop legs are affine on each segment, and the formal variable q is
 * never evaluated: points carry their q-exponent as a rational. */

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cattorus/lattice.hpp"
#include "cattorus/report.hpp"

namespace cattorus {

/* A point of the bundle over (s, t), written in the trivialization that a
 * lift x of s determines.  Changing the lift x -> x + m rescales the value
 * by the phase -J(m, t~), with t~ any lift of t. */
struct FiberPoint {
  VecQ s;     // first base coordinate, entries in [0,1)
  VecQ t;     // second base coordinate, entries in [0,1)
  VecQ lift;  // x with exp(x) = s
  Scalar value;
};

/* Validates exp(lift) == s before assembling the point. */
FiberPoint fiber_point(const Lattice& lat, const VecQ& s, const VecQ& t,
                       const VecQ& lift, const Scalar& value);

FiberPoint relift(const Lattice& lat, const FiberPoint& p, const VecZ& m);

/* Trivializing phase -J(s_lift, t_lift) of the fiber over the pair of
 * lifts, relative to the base point trivialization.  It is bilinear in
 * the lifts, so transitions are its first-variable increments and its
 * group coboundary (the associator of the multiplication) telescopes to
 * zero on the nose. */
CircleElt gerbe_cocycle(const Lattice& lat, const VecQ& s_lift,
                        const VecQ& t_lift);
CircleElt gerbe_associator(const Lattice& lat, const VecQ& r, const VecQ& s,
                           const VecQ& t);

/* Piecewise linear paths in the Lie algebra, interpolating breakpoints. */
struct PLPath {
  std::vector<std::pair<Rational, VecQ>> breakpoints;
};

/* Validates: nonempty, times strictly increasing from 0 to 1. */
PLPath pl_path(std::vector<std::pair<Rational, VecQ>> breakpoints);
VecQ pl_eval(const PLPath& p, const Rational& t);
bool is_loop(const PLPath& p);

PLPath constant_path(const VecQ& x);
PLPath straight_loop(const VecZ& m);
PLPath refine(const PLPath& p, const std::vector<Rational>& extra_times);
PLPath pl_add(const PLPath& a, const PLPath& b);
/* Runs a on [0, 1/2] and b on [1/2, 1], shifting b to continue a's lift. */
PLPath concat_loops(const PLPath& a, const PLPath& b);

/* Holonomy of the connection along the loop (f, g) in T x T:
 * integral of J(f', g) dt minus J(f(0), g(1) - g(0)), mod 1.  Both paths
 * must descend to loops. */
CircleElt holonomy(const Lattice& lat, const PLPath& f, const PLPath& g);

/* A point of the Looijenga line bundle in coordinates: the coweight and
 * circle components of the lift, a phase, and the formal q-exponent. */
struct LooPoint {
  VecQ x_tau;
  VecQ x_one;
  CircleElt phase;
  Rational qexp;
  bool operator==(const LooPoint&) const = default;
};

/* The defining relation, transported by a coweight: x_tau gains m, the
 * q-exponent drops by I(m,m)/2 + I(m, x_tau), the phase by I(m, x_one). */
LooPoint looijenga_transport(const Lattice& lat, const LooPoint& p,
                             const VecZ& m);

/* (x, t, z) -> (t q^x, z q^{-I(x,x)/2}), the map that matches the inertia
 * presentation relation with the Looijenga relation. */
LooPoint looijenga_from_inertia(const Lattice& lat, const VecQ& x,
                                const VecQ& t_lift, const CircleElt& z);

struct ThetaSeries {
  long long max_half_norm = 0;
  std::vector<Int> counts;  // counts[k] = #{m : J(m,m) = k}
};

/* Requires a positive definite Gram matrix. */
ThetaSeries theta_series(const Lattice& lat, long long max_half_norm);
std::string theta_export(const ThetaSeries& s);

/* Weight refinement: each vector m is recorded under the shifted weight
 * lambda - k I(m), still graded by its half norm. */
struct WeightedTerm {
  Int half_norm;
  VecZ weight;
  Int count;
};
std::vector<WeightedTerm> theta_series_weighted(const Lattice& lat,
                                                long long max_half_norm,
                                                const VecZ& shift,
                                                const Int& k);
std::string theta_export(const std::vector<WeightedTerm>& terms);

/* Weights of a class function decompose into orbits of the shift maps
 * lambda -> lambda - k I(m).  For k != 0 the canonical representative is
 * the unique orbit member with (kI)^{-1} lambda in [0,1)^rank. */
VecZ orbit_representative(const Lattice& lat, const Int& k, const VecZ& weight);

struct WeightOrbit {
  VecZ rep;
  std::vector<VecZ> members;   // table entries lying on this orbit
  Int multiplicity;            // multiplicity of the first member seen
  bool constant = false;       // all members share that multiplicity
  bool closed = false;         // a shift map was actually witnessed
};

std::vector<WeightOrbit> class_function_decompose(
    const Lattice& lat, const Int& k,
    const std::vector<std::pair<VecZ, Int>>& weights);

Report gerbe_check(const Lattice& lat, std::uint64_t seed, int trials);
Report holonomy_check(const Lattice& lat, std::uint64_t seed, int trials);
Report looijenga_check(const Lattice& lat, std::uint64_t seed, int trials);
Report theta_check(const Lattice& lat, long long max_half_norm,
                   std::uint64_t seed, int trials);
Report class_function_check(const Lattice& lat, std::uint64_t seed,
                            int trials);

}  // namespace cattorus
