#pragma once

/* Small dense exact linear algebra.  Ranks here stay single-digit, so the
 * implementations favour clarity over asymptotics. */

#include "cattorus/exact.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace cattorus {

template <class T>
class Vec {
 public:
  Vec() = default;
  explicit Vec(std::size_t n) : v_(n, T(0)) {}
  Vec(std::initializer_list<T> xs) : v_(xs) {}
  static Vec zero(std::size_t n) { return Vec(n); }
  static Vec unit(std::size_t n, std::size_t i) {
    Vec e(n);
    e[i] = T(1);
    return e;
  }

  std::size_t size() const { return v_.size(); }
  T& operator[](std::size_t i) { return v_[i]; }
  const T& operator[](std::size_t i) const { return v_[i]; }
  bool is_zero() const {
    for (auto& x : v_)
      if (x != 0) return false;
    return true;
  }

  Vec operator+(const Vec& o) const {
    Vec r(size());
    for (std::size_t i = 0; i < size(); ++i) r[i] = v_[i] + o[i];
    return r;
  }
  Vec operator-(const Vec& o) const {
    Vec r(size());
    for (std::size_t i = 0; i < size(); ++i) r[i] = v_[i] - o[i];
    return r;
  }
  Vec operator-() const {
    Vec r(size());
    for (std::size_t i = 0; i < size(); ++i) r[i] = -v_[i];
    return r;
  }
  template <class S>
  Vec scaled(const S& c) const {
    Vec r(size());
    for (std::size_t i = 0; i < size(); ++i) r[i] = v_[i] * T(c);
    return r;
  }
  bool operator==(const Vec& o) const { return v_ == o.v_; }
  bool operator!=(const Vec& o) const { return v_ != o.v_; }
  bool operator<(const Vec& o) const { return v_ < o.v_; }

  auto begin() const { return v_.begin(); }
  auto end() const { return v_.end(); }

 private:
  std::vector<T> v_;
};

using VecZ = Vec<Int>;
using VecQ = Vec<Rational>;

inline VecQ to_q(const VecZ& v) {
  VecQ r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rational(v[i]);
  return r;
}

/* Componentwise floor resp. fractional part; frac lands in [0,1)^n. */
inline VecZ q_floor(const VecQ& v) {
  VecZ r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = rat_floor(v[i]);
  return r;
}
inline VecQ q_frac(const VecQ& v) {
  VecQ r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = rat_frac(v[i]);
  return r;
}
inline bool is_integral(const VecQ& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (rat_den(v[i]) != 1) return false;
  return true;
}
inline VecZ to_z(const VecQ& v) {
  VecZ r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (rat_den(v[i]) != 1) throw std::invalid_argument("to_z: non-integral entry");
    r[i] = rat_num(v[i]);
  }
  return r;
}

template <class T>
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(std::size_t r, std::size_t c) : rows_(r), cols_(c), a_(r * c, T(0)) {}
  Mat(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    for (auto& row : rows) {
      if (row.size() != cols_) throw std::invalid_argument("Mat: ragged rows");
      for (auto& x : row) a_.push_back(x);
    }
  }
  static Mat identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const T& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  Mat operator+(const Mat& o) const {
    Mat r(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
    return r;
  }
  Mat operator-(const Mat& o) const {
    Mat r(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
    return r;
  }
  Mat operator-() const {
    Mat r(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = -a_[i];
    return r;
  }
  template <class S>
  Mat scaled(const S& c) const {
    Mat r(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * T(c);
    return r;
  }
  Mat operator*(const Mat& o) const {
    Mat r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const T& x = at(i, k);
        if (x == 0) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += x * o.at(k, j);
      }
    return r;
  }
  Vec<T> operator*(const Vec<T>& v) const {
    Vec<T> r(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r[i] += at(i, j) * v[j];
    return r;
  }
  Mat transposed() const {
    Mat r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
  }
  bool operator==(const Mat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
  bool operator!=(const Mat& o) const { return !(*this == o); }
  bool operator<(const Mat& o) const { return a_ < o.a_; }
  bool is_symmetric() const {
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if (at(i, j) != at(j, i)) return false;
    return true;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<T> a_;
};

using MatZ = Mat<Int>;
using MatQ = Mat<Rational>;

inline MatQ to_q(const MatZ& m) {
  MatQ r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r.at(i, j) = Rational(m.at(i, j));
  return r;
}

/* x^T A y, with integer A and arbitrary (integer or rational) vectors. */
template <class S>
S pair_with(const MatZ& a, const Vec<S>& x, const Vec<S>& y) {
  S out(0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (x[i] == 0) continue;
    S row(0);
    for (std::size_t j = 0; j < a.cols(); ++j) row += S(a.at(i, j)) * y[j];
    out += x[i] * row;
  }
  return out;
}

inline Rational pair_qz(const MatZ& a, const VecQ& x, const VecZ& y) { return pair_with(a, x, to_q(y)); }

template <class T>
T dot(const Vec<T>& x, const Vec<T>& y) {
  T out(0);
  for (std::size_t i = 0; i < x.size(); ++i) out += x[i] * y[i];
  return out;
}
inline Rational dot_qz(const VecQ& x, const VecZ& y) { return dot(x, to_q(y)); }

/* Fraction-free (Bareiss) determinant. */
Int det(const MatZ& m);

/* Exact inverse over Q; throws on singular input. */
MatQ inverse(const MatQ& m);
inline MatQ inverse(const MatZ& m) { return inverse(to_q(m)); }

/* Is every entry an integer? */
inline bool is_integral(const MatQ& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (rat_den(m.at(i, j)) != 1) return false;
  return true;
}
inline MatZ to_z(const MatQ& m) {
  MatZ r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (rat_den(m.at(i, j)) != 1) throw std::invalid_argument("to_z: non-integral entry");
      r.at(i, j) = rat_num(m.at(i, j));
    }
  return r;
}

template <class T>
std::string show(const Vec<T>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += show(v[i]);
  }
  return s + ")";
}

template <class T>
std::string show(const Mat<T>& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) s += ";";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) s += ",";
      s += show(m.at(i, j));
    }
  }
  return s + "]";
}

}  // namespace cattorus
