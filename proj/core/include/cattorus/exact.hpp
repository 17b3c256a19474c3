#pragma once

/* Exact scalar types.  Everything downstream is computed over Q, Q/Z and
 * Q_{>0} x Q/Z; no floating point anywhere in the library. */

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace cattorus {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;  // always canonical, den > 0

inline Int rat_num(const Rational& r) { return numerator(r); }
inline Int rat_den(const Rational& r) { return denominator(r); }

/* floor(p/q) with the usual rounding towards -infinity. */
Int rat_floor(const Rational& r);

/* r - floor(r), in [0,1). */
Rational rat_frac(const Rational& r);

std::string show(const Int& n);
std::string show(const Rational& r);

/* Element of Q/Z, stored by its unique representative in [0,1). */
class CircleElt {
 public:
  CircleElt() = default;
  explicit CircleElt(const Rational& r) : rep_(rat_frac(r)) {}
  CircleElt(long long num, long long den) : CircleElt(Rational(num, den)) {}

  const Rational& rep() const { return rep_; }
  bool is_zero() const { return rep_ == 0; }

  CircleElt operator+(const CircleElt& o) const { return CircleElt(rep_ + o.rep_); }
  CircleElt operator-(const CircleElt& o) const { return CircleElt(rep_ - o.rep_); }
  CircleElt operator-() const { return CircleElt(-rep_); }
  CircleElt times(const Int& k) const { return CircleElt(rep_ * Rational(k)); }

  bool operator==(const CircleElt& o) const { return rep_ == o.rep_; }
  bool operator!=(const CircleElt& o) const { return rep_ != o.rep_; }

 private:
  Rational rep_;  // in [0,1)
};

std::string show(const CircleElt& c);

/* Multiplicative model of C^*: positive rational magnitude times a phase
 * exp(2*pi*i*t) with t in Q/Z.  Closed under product and inverse; equality
 * is exact. */
class Scalar {
 public:
  Scalar() : mag_(1) {}
  Scalar(const Rational& mag, const CircleElt& phase);
  static Scalar one() { return Scalar(); }
  static Scalar from_phase(const CircleElt& phase) { return Scalar(Rational(1), phase); }

  const Rational& mag() const { return mag_; }
  const CircleElt& phase() const { return phase_; }
  bool is_one() const { return mag_ == 1 && phase_.is_zero(); }

  Scalar operator*(const Scalar& o) const { return Scalar(mag_ * o.mag_, phase_ + o.phase_); }
  Scalar inv() const { return Scalar(Rational(1) / mag_, -phase_); }
  Scalar pow(const Int& k) const;

  bool operator==(const Scalar& o) const { return mag_ == o.mag_ && phase_ == o.phase_; }
  bool operator!=(const Scalar& o) const { return !(*this == o); }

 private:
  Rational mag_;  // > 0
  CircleElt phase_;
};

std::string show(const Scalar& s);

}  // namespace cattorus
