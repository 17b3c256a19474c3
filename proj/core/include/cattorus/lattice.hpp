#pragma once

/* Even lattices presented by a half Gram matrix.
 *
 * A lattice here is Z^r equipped with an integer matrix J; the symmetric
 * Gram matrix is I = J + J^T, which is automatically even.  J itself enters
 * many constructions downstream (cocycles, commutator pairings), so it is
 * part of the data, not just a convenience. */

#include "cattorus/exact.hpp"
#include "cattorus/linalg.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cattorus {

/* Raised when a symmetric Gram matrix has an odd diagonal entry.  Callers
 * distinguish bad input data from failed checks, so this gets its own type. */
struct OddLatticeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Lattice {
  std::string name;
  MatZ j;  // half Gram
  MatZ i;  // j + j^T

  std::size_t rank() const { return j.rows(); }

  /* Pairings x^T J y and x^T I y. */
  Int j_pair(const VecZ& x, const VecZ& y) const { return pair_with(j, x, y); }
  Rational j_pair(const VecQ& x, const VecQ& y) const { return pair_with(j, x, y); }
  Int i_pair(const VecZ& x, const VecZ& y) const { return pair_with(i, x, y); }
  Rational i_pair(const VecQ& x, const VecQ& y) const { return pair_with(i, x, y); }

  /* J^sharp = J^T m, J^flat = J m, I^sharp = I m, as weight vectors. */
  VecZ j_sharp(const VecZ& m) const { return j.transposed() * m; }
  VecZ j_flat(const VecZ& m) const { return j * m; }
  VecZ i_sharp(const VecZ& m) const { return i * m; }
  VecQ j_sharp(const VecQ& m) const { return to_q(j.transposed()) * m; }
  VecQ j_flat(const VecQ& m) const { return to_q(j) * m; }
  VecQ i_sharp(const VecQ& m) const { return to_q(i) * m; }

  Int half_norm(const VecZ& m) const { return j_pair(m, m); }

  bool is_positive_definite() const;
  bool is_unimodular() const { return det(i) == 1 || det(i) == -1; }
};

Lattice lattice_from_j(std::string name, MatZ j);

/* Accepts a symmetric even integer matrix and splits it into a half Gram:
 * diagonal halved, strictly lower part kept, strictly upper part dropped. */
Lattice lattice_from_i(std::string name, MatZ i);

/* Built-in names: A1, A2, A1xA1, U, D4, E8. */
Lattice builtin_lattice(const std::string& name);
const std::vector<std::string>& builtin_lattice_names();

/* All m with half_norm(m) == k for each k = 0..max_half_norm.  Requires a
 * positive definite Gram; enumeration runs over an exact LDL^T split of I,
 * so no rounding is involved. */
std::vector<std::vector<VecZ>> vectors_by_half_norm(const Lattice& lat, long long max_half_norm);

/* Counts of the above (the theta series coefficients at q^k). */
std::vector<Int> theta_counts(const Lattice& lat, long long max_half_norm);

/* All F in GL_r(Z) with F^T I F = I.  Positive definite lattices go through
 * short-vector backtracking; indefinite ones of rank <= 2 fall back to a
 * bounded entry search.  max_order aborts runaway searches. */
std::vector<MatZ> isometry_group(const Lattice& lat, std::size_t max_order = 200000);

/* The two-torsion quadratic form phi(a) = J(a,a) mod 2 on (Z/2)^r and its
 * automorphism group inside GL_r(F_2).  Entries of the returned matrices are
 * 0/1.  Enumeration is over all of GL_r(F_2), so rank is capped at 4. */
Int phi_mod2(const Lattice& lat, const VecZ& a);
std::vector<MatZ> orthogonal_mod2(const Lattice& lat);

/* All 2^r vectors with entries 0/1, in lexicographic order. */
std::vector<VecZ> f2_vectors(std::size_t rank);

/* mod-2 reduction helpers */
Int mod2(const Int& x);
VecZ vec_mod2(const VecZ& v);
MatZ mat_mod2(const MatZ& m);

/* Reads {"name": ..., "rank": n, "gram": [[...]], "gram_is": "J"|"I"}. */
Lattice lattice_from_json_text(const std::string& text);
Lattice load_lattice_file(const std::string& path);

/* Resolves a CLI-style designator: a builtin name or "file:path.json". */
Lattice resolve_lattice(const std::string& designator);

}  // namespace cattorus
