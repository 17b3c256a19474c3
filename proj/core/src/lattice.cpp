#include "cattorus/lattice.hpp"

#include <algorithm>
#include <map>

namespace cattorus {

namespace {

struct Ldl {
  MatQ l;  // unit lower triangular
  std::vector<Rational> d;
};

/* Pivot-free LDL^T; succeeds exactly when the input is positive definite. */
std::optional<Ldl> ldl_decompose(const MatQ& a) {
  const std::size_t n = a.rows();
  Ldl out{MatQ::identity(n), std::vector<Rational>(n)};
  for (std::size_t i = 0; i < n; ++i) {
    Rational di = a.at(i, i);
    for (std::size_t k = 0; k < i; ++k) di -= out.l.at(i, k) * out.l.at(i, k) * out.d[k];
    if (di <= 0) return std::nullopt;
    out.d[i] = di;
    for (std::size_t j = i + 1; j < n; ++j) {
      Rational v = a.at(j, i);
      for (std::size_t k = 0; k < i; ++k) v -= out.l.at(j, k) * out.l.at(i, k) * out.d[k];
      out.l.at(j, i) = v / di;
    }
  }
  return out;
}

}  // namespace

bool Lattice::is_positive_definite() const {
  return ldl_decompose(to_q(i)).has_value();
}

Lattice lattice_from_j(std::string name, MatZ j) {
  if (j.rows() != j.cols()) throw std::invalid_argument("lattice: half Gram must be square");
  MatZ i = j + j.transposed();
  return Lattice{std::move(name), std::move(j), std::move(i)};
}

Lattice lattice_from_i(std::string name, MatZ i) {
  if (i.rows() != i.cols()) throw std::invalid_argument("lattice: Gram must be square");
  if (!i.is_symmetric()) throw std::invalid_argument("lattice: Gram must be symmetric");
  const std::size_t n = i.rows();
  MatZ j(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    if (mod2(i.at(r, r)) != 0)
      throw OddLatticeError("lattice: diagonal entry " + show(i.at(r, r)) + " is odd");
    j.at(r, r) = i.at(r, r) / 2;
    for (std::size_t c = 0; c < r; ++c) j.at(r, c) = i.at(r, c);
  }
  return Lattice{std::move(name), std::move(j), std::move(i)};
}

Lattice builtin_lattice(const std::string& name) {
  if (name == "A1") return lattice_from_j("A1", MatZ{{Int(1)}});
  if (name == "A2") return lattice_from_j("A2", MatZ{{Int(1), Int(-1)}, {Int(0), Int(1)}});
  if (name == "A1xA1") return lattice_from_j("A1xA1", MatZ::identity(2));
  if (name == "U") return lattice_from_i("U", MatZ{{Int(0), Int(1)}, {Int(1), Int(0)}});
  if (name == "D4")
    return lattice_from_i("D4", MatZ{{Int(2), Int(-1), Int(0), Int(0)},
                                     {Int(-1), Int(2), Int(-1), Int(-1)},
                                     {Int(0), Int(-1), Int(2), Int(0)},
                                     {Int(0), Int(-1), Int(0), Int(2)}});
  if (name == "E8") {
    MatZ i(8, 8);
    for (std::size_t k = 0; k < 8; ++k) i.at(k, k) = 2;
    auto edge = [&](std::size_t a, std::size_t b) {
      i.at(a - 1, b - 1) = -1;
      i.at(b - 1, a - 1) = -1;
    };
    edge(1, 3);
    edge(3, 4);
    edge(2, 4);
    edge(4, 5);
    edge(5, 6);
    edge(6, 7);
    edge(7, 8);
    return lattice_from_i("E8", std::move(i));
  }
  throw std::invalid_argument("builtin_lattice: unknown name '" + name + "'");
}

const std::vector<std::string>& builtin_lattice_names() {
  static const std::vector<std::string> names = {"A1", "A2", "A1xA1", "U", "D4", "E8"};
  return names;
}

std::vector<std::vector<VecZ>> vectors_by_half_norm(const Lattice& lat, long long max_half_norm) {
  if (max_half_norm < 0) throw std::invalid_argument("vectors_by_half_norm: negative bound");
  const std::size_t n = lat.rank();
  std::vector<std::vector<VecZ>> buckets(static_cast<std::size_t>(max_half_norm) + 1);
  if (n == 0) {
    buckets[0].push_back(VecZ(0));
    return buckets;
  }
  auto ldl = ldl_decompose(to_q(lat.i));
  if (!ldl) throw std::invalid_argument("vectors_by_half_norm: Gram is not positive definite");

  const Rational budget = Rational(2 * max_half_norm);
  VecZ x(n);
  /* Walk coordinates from the last down; at each level the form restricted
   * to the free coordinate is d_i (x_i + c_i)^2, so scanning outward from
   * the vertex and stopping at the first violation is exhaustive. */
  auto descend = [&](auto&& self, std::size_t level, const Rational& used) -> void {
    const std::size_t i = level - 1;
    Rational c(0);
    for (std::size_t jj = i + 1; jj < n; ++jj) c += ldl->l.at(jj, i) * Rational(x[jj]);
    const Rational room = budget - used;
    auto admits = [&](const Int& t) {
      Rational y = Rational(t) + c;
      return ldl->d[i] * y * y <= room;
    };
    auto step = [&](Int t, int dir) {
      while (admits(t)) {
        x[i] = t;
        Rational y = Rational(t) + c;
        Rational used2 = used + ldl->d[i] * y * y;
        if (i == 0) {
          Int hn = lat.half_norm(x);
          buckets[static_cast<std::size_t>(hn.convert_to<long long>())].push_back(x);
        } else {
          self(self, i, used2);
        }
        t += dir;
      }
    };
    Int t0 = rat_floor(-c);
    step(t0, -1);
    step(t0 + 1, +1);
    x[i] = 0;
  };
  descend(descend, n, Rational(0));
  for (auto& b : buckets) std::sort(b.begin(), b.end());
  return buckets;
}

std::vector<Int> theta_counts(const Lattice& lat, long long max_half_norm) {
  auto buckets = vectors_by_half_norm(lat, max_half_norm);
  std::vector<Int> counts(buckets.size());
  for (std::size_t k = 0; k < buckets.size(); ++k) counts[k] = Int(buckets[k].size());
  return counts;
}

namespace {

std::vector<MatZ> isometries_backtracking(const Lattice& lat, std::size_t max_order) {
  const std::size_t n = lat.rank();
  long long max_hn = 0;
  for (std::size_t k = 0; k < n; ++k)
    max_hn = std::max(max_hn, (lat.i.at(k, k) / 2).convert_to<long long>());
  auto buckets = vectors_by_half_norm(lat, max_hn);
  std::vector<MatZ> out;
  std::vector<VecZ> cols(n);
  auto extend = [&](auto&& self, std::size_t col) -> void {
    const auto& cand = buckets[static_cast<std::size_t>((lat.i.at(col, col) / 2).convert_to<long long>())];
    for (const VecZ& v : cand) {
      bool fits = true;
      for (std::size_t prev = 0; prev < col && fits; ++prev)
        fits = lat.i_pair(cols[prev], v) == lat.i.at(prev, col);
      if (!fits) continue;
      cols[col] = v;
      if (col + 1 == n) {
        MatZ f(n, n);
        for (std::size_t c = 0; c < n; ++c)
          for (std::size_t r = 0; r < n; ++r) f.at(r, c) = cols[c][r];
        out.push_back(std::move(f));
        if (out.size() > max_order)
          throw std::runtime_error("isometry_group: exceeded max_order=" + std::to_string(max_order));
      } else {
        self(self, col + 1);
      }
    }
  };
  extend(extend, 0);
  return out;
}

/* Indefinite forms have no short-vector ladder to climb, so for the small
 * ranks we need (the hyperbolic plane) search a bounded entry box instead. */
std::vector<MatZ> isometries_bounded(const Lattice& lat, long long bound) {
  const std::size_t n = lat.rank();
  const std::size_t cells = n * n;
  std::vector<MatZ> out;
  MatZ f(n, n);
  auto fill = [&](auto&& self, std::size_t cell) -> void {
    if (cell == cells) {
      if (f.transposed() * lat.i * f == lat.i) out.push_back(f);
      return;
    }
    for (long long e = -bound; e <= bound; ++e) {
      f.at(cell / n, cell % n) = e;
      self(self, cell + 1);
    }
  };
  fill(fill, 0);
  return out;
}

}  // namespace

std::vector<MatZ> isometry_group(const Lattice& lat, std::size_t max_order) {
  const std::size_t n = lat.rank();
  std::vector<MatZ> out;
  if (n == 0) {
    out.push_back(MatZ(0, 0));
    return out;
  }
  if (lat.is_positive_definite()) {
    out = isometries_backtracking(lat, max_order);
  } else if (n <= 2) {
    out = isometries_bounded(lat, 3);
  } else {
    throw std::runtime_error("isometry_group: indefinite Gram of rank > 2 is not supported");
  }
  std::sort(out.begin(), out.end());
  return out;
}

Int mod2(const Int& x) {
  Int m = x % 2;
  if (m < 0) m += 2;
  return m;
}

VecZ vec_mod2(const VecZ& v) {
  VecZ r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = mod2(v[i]);
  return r;
}

MatZ mat_mod2(const MatZ& m) {
  MatZ r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r.at(i, j) = mod2(m.at(i, j));
  return r;
}

Int phi_mod2(const Lattice& lat, const VecZ& a) { return mod2(lat.j_pair(a, a)); }

std::vector<VecZ> f2_vectors(std::size_t rank) {
  std::vector<VecZ> out;
  out.reserve(std::size_t(1) << rank);
  for (std::size_t mask = 0; mask < (std::size_t(1) << rank); ++mask) {
    VecZ v(rank);
    for (std::size_t k = 0; k < rank; ++k) v[k] = (mask >> (rank - 1 - k)) & 1;
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<MatZ> orthogonal_mod2(const Lattice& lat) {
  const std::size_t n = lat.rank();
  if (n > 4) throw std::runtime_error("orthogonal_mod2: rank > 4 is not supported");
  auto points = f2_vectors(n);
  std::vector<Int> phi(points.size());
  for (std::size_t k = 0; k < points.size(); ++k) phi[k] = phi_mod2(lat, points[k]);
  std::vector<MatZ> out;
  const std::size_t cells = n * n;
  MatZ a(n, n);
  auto fill = [&](auto&& self, std::size_t cell) -> void {
    if (cell == cells) {
      if (mod2(det(a)) == 0) return;
      for (std::size_t k = 0; k < points.size(); ++k)
        if (phi_mod2(lat, a * points[k]) != phi[k]) return;
      out.push_back(a);
      return;
    }
    for (int e = 0; e <= 1; ++e) {
      a.at(cell / n, cell % n) = e;
      self(self, cell + 1);
    }
  };
  if (n == 0) {
    out.push_back(MatZ(0, 0));
  } else {
    fill(fill, 0);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace cattorus
