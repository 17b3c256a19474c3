#include "cattorus/linalg.hpp"

namespace cattorus {

Int det(const MatZ& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det: matrix not square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  MatZ a = m;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a.at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a.at(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Int num = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
        a.at(i, j) = num / prev;  // Bareiss: division is exact
      }
    prev = a.at(k, k);
  }
  return sign > 0 ? a.at(n - 1, n - 1) : -a.at(n - 1, n - 1);
}

MatQ inverse(const MatQ& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: matrix not square");
  const std::size_t n = m.rows();
  MatQ a = m;
  MatQ inv = MatQ::identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a.at(p, k) == 0) ++p;
    if (p == n) throw std::invalid_argument("inverse: singular matrix");
    if (p != k)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a.at(k, j), a.at(p, j));
        std::swap(inv.at(k, j), inv.at(p, j));
      }
    Rational piv = a.at(k, k);
    for (std::size_t j = 0; j < n; ++j) {
      a.at(k, j) /= piv;
      inv.at(k, j) /= piv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a.at(i, k) == 0) continue;
      Rational f = a.at(i, k);
      for (std::size_t j = 0; j < n; ++j) {
        a.at(i, j) -= f * a.at(k, j);
        inv.at(i, j) -= f * inv.at(k, j);
      }
    }
  }
  return inv;
}

}  // namespace cattorus
