#pragma once

// Independent oracles the test suite measures the library against.
//
// The theta oracle counts lattice vectors in Euclidean coordinate models
// (A2 as the sum-zero plane in Z^3, D4 as the even-sum sublattice of Z^4,
// E8 as D8 glued with its half-ones coset) using plain integer loops; it
// shares no code with the Gram-basis enumeration in the library, so the
// two can only agree if both are right.  The isometry oracle searches all
// integer matrices inside rigorous per-entry bounds instead of the
// engine's short-vector backtracking.

#include <string>
#include <vector>

#include "cattorus/lattice.hpp"

namespace oracle {

// Models: A1, A1xA1, A2, D4, E8.  counts[k] = #{x : |x|^2/2 = k} in the
// model named; throws on an unknown name.
std::vector<cattorus::Int> euclidean_theta(const std::string& model,
                                           long long max_half_norm);

// All F in GL_r(Z) with F^T I F = I, by exhaustive search over the box
// |F_ij|^2 <= (I^-1)_ii * I_jj (Cauchy-Schwarz against the dual basis;
// valid whenever I is positive definite).  For the hyperbolic plane the
// box is widened to entries in [-3,3]; columns there are isotropic, which
// forces one coordinate of each to vanish, so the box is exhaustive too.
std::vector<cattorus::MatZ> bounded_isometries(const cattorus::Lattice& lat);

}  // namespace oracle
