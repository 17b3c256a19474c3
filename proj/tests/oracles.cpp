#include "oracles.hpp"

#include <stdexcept>
#include <vector>

namespace oracle {

using cattorus::Int;
using cattorus::Lattice;
using cattorus::MatQ;
using cattorus::MatZ;
using cattorus::Rational;
using cattorus::VecZ;

namespace {

long long isqrt_ll(long long v) {
  long long k = 0;
  while ((k + 1) * (k + 1) <= v) ++k;
  return k;
}

/* Largest integer k >= 0 with k^2 <= v. */
long long rat_isqrt(const Rational& v) {
  long long k = 0;
  while (Rational((k + 1) * (k + 1)) <= v) ++k;
  return k;
}

/* All points of vals^n whose squared length stays within budget; partial
 * sums prune the descent, so the visited tree is far smaller than the
 * full grid.  emit receives the point and its squared length. */
template <class F>
void grid_scan(int n, const std::vector<long long>& vals, long long budget,
               F&& emit) {
  std::vector<long long> x(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self, int i, long long used) -> void {
    if (i == n) {
      emit(x, used);
      return;
    }
    for (long long v : vals) {
      long long u = used + v * v;
      if (u > budget) continue;
      x[static_cast<std::size_t>(i)] = v;
      self(self, i + 1, u);
    }
  };
  rec(rec, 0, 0);
}

std::vector<long long> symmetric_range(long long b) {
  std::vector<long long> vals;
  for (long long v = -b; v <= b; ++v) vals.push_back(v);
  return vals;
}

std::vector<long long> odd_range(long long b) {
  std::vector<long long> vals;
  for (long long v = -b; v <= b; ++v)
    if (v % 2 != 0) vals.push_back(v);
  return vals;
}

}  // namespace

std::vector<Int> euclidean_theta(const std::string& model,
                                 long long max_half_norm) {
  if (max_half_norm < 0)
    throw std::invalid_argument("euclidean_theta: negative bound");
  std::vector<Int> counts(static_cast<std::size_t>(max_half_norm) + 1, Int(0));
  auto bucket = [&](long long hn) { counts[static_cast<std::size_t>(hn)] += 1; };

  if (model == "A1" || model == "A1xA1") {
    /* Z resp. Z^2 with the doubled dot product: half norm x1^2 (+ x2^2). */
    int n = model == "A1" ? 1 : 2;
    grid_scan(n, symmetric_range(isqrt_ll(max_half_norm)), max_half_norm,
              [&](const std::vector<long long>&, long long s) { bucket(s); });
  } else if (model == "A2") {
    /* Sum-zero plane in Z^3 with the plain dot product.  x1^2+x2^2+x3^2 is
     * even whenever the coordinates sum to zero, since n^2 = n mod 2. */
    long long budget = 2 * max_half_norm;
    grid_scan(2, symmetric_range(isqrt_ll(budget)), budget,
              [&](const std::vector<long long>& x, long long s) {
                long long x3 = -x[0] - x[1];
                long long tot = s + x3 * x3;
                if (tot <= budget) bucket(tot / 2);
              });
  } else if (model == "D4") {
    /* Even-coordinate-sum sublattice of Z^4. */
    long long budget = 2 * max_half_norm;
    grid_scan(4, symmetric_range(isqrt_ll(budget)), budget,
              [&](const std::vector<long long>& x, long long s) {
                if ((x[0] + x[1] + x[2] + x[3]) % 2 == 0) bucket(s / 2);
              });
  } else if (model == "E8") {
    /* D8 together with its half-ones coset.  Coset coordinates are stored
     * doubled (odd integers z = 2x), so |x|^2 = |z|^2/4 and the glue
     * condition sum(x) even becomes sum(z) = 0 mod 4.  Odd squares are
     * 1 mod 8, so |z|^2 is divisible by 8 and the half norm |z|^2/8 is
     * integral automatically. */
    long long budget = 2 * max_half_norm;
    grid_scan(8, symmetric_range(isqrt_ll(budget)), budget,
              [&](const std::vector<long long>& x, long long s) {
                long long sum = 0;
                for (long long v : x) sum += v;
                if (sum % 2 == 0) bucket(s / 2);
              });
    grid_scan(8, odd_range(isqrt_ll(4 * budget)), 4 * budget,
              [&](const std::vector<long long>& z, long long s) {
                long long sum = 0;
                for (long long v : z) sum += v;
                if (sum % 4 == 0) bucket(s / 8);
              });
  } else {
    throw std::invalid_argument("euclidean_theta: unknown model '" + model +
                                "'");
  }
  return counts;
}

std::vector<MatZ> bounded_isometries(const Lattice& lat) {
  const std::size_t r = lat.rank();
  const MatZ& gram = lat.i;

  /* Per-entry bound.  Column j of an isometry is the coordinate vector of
   * an image basis vector b_j' of norm I_jj; its i-th coordinate is the
   * pairing of b_j' with the i-th dual basis vector, so Cauchy-Schwarz
   * gives F_ij^2 <= (I^-1)_ii I_jj.  The hyperbolic plane gets a fixed
   * box instead: its columns must be isotropic, hence supported on a
   * single coordinate, and the unit pairing pins that entry to +-1. */
  std::vector<std::vector<long long>> bound(r, std::vector<long long>(r, 3));
  if (lat.is_positive_definite()) {
    MatQ dual = inverse(gram);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j)
        bound[i][j] = rat_isqrt(dual.at(i, i) * Rational(gram.at(j, j)));
  } else if (r > 2) {
    throw std::invalid_argument(
        "bounded_isometries: indefinite form of rank above 2");
  }

  /* Candidate columns: every integer vector inside the box with the right
   * norm. */
  std::vector<std::vector<VecZ>> cand(r);
  for (std::size_t j = 0; j < r; ++j) {
    VecZ c(r);
    auto rec = [&](auto&& self, std::size_t i) -> void {
      if (i == r) {
        if (lat.i_pair(c, c) == gram.at(j, j)) cand[j].push_back(c);
        return;
      }
      for (long long v = -bound[i][j]; v <= bound[i][j]; ++v) {
        c[i] = v;
        self(self, i + 1);
      }
    };
    rec(rec, 0);
  }

  /* Assemble columns left to right, holding every pairwise Gram entry. */
  std::vector<MatZ> found;
  std::vector<const VecZ*> pick(r, nullptr);
  auto assemble = [&](auto&& self, std::size_t j) -> void {
    if (j == r) {
      MatZ f(r, r);
      for (std::size_t jj = 0; jj < r; ++jj)
        for (std::size_t i = 0; i < r; ++i) f.at(i, jj) = (*pick[jj])[i];
      if (det(f) == 1 || det(f) == -1) found.push_back(f);
      return;
    }
    for (const VecZ& c : cand[j]) {
      bool ok = true;
      for (std::size_t k = 0; k < j && ok; ++k)
        ok = lat.i_pair(*pick[k], c) == gram.at(k, j);
      if (!ok) continue;
      pick[j] = &c;
      self(self, j + 1);
    }
  };
  assemble(assemble, 0);
  return found;
}

}  // namespace oracle
