#include "cattorus/exact.hpp"

#include <stdexcept>

namespace cattorus {

Int rat_floor(const Rational& r) {
  Int n = numerator(r), d = denominator(r);  // d > 0
  Int q = n / d;
  if (n % d != 0 && n < 0) --q;
  return q;
}

Rational rat_frac(const Rational& r) { return r - Rational(rat_floor(r)); }

std::string show(const Int& n) { return n.str(); }

std::string show(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

std::string show(const CircleElt& c) { return "[" + show(c.rep()) + "]"; }

Scalar::Scalar(const Rational& mag, const CircleElt& phase) : mag_(mag), phase_(phase) {
  if (mag_ <= 0) throw std::invalid_argument("Scalar: magnitude must be positive");
}

Scalar Scalar::pow(const Int& k) const {
  if (k == 0) return Scalar();
  Rational m(1);
  Int a = abs(k);
  Rational base = mag_;
  for (Int i = 0; i < a; ++i) m *= base;
  Scalar out(k > 0 ? m : Rational(1) / m, phase_.times(k));
  return out;
}

std::string show(const Scalar& s) {
  if (s.is_one()) return "1";
  std::string out = show(s.mag());
  if (!s.phase().is_zero()) out += "*e(" + show(s.phase().rep()) + ")";
  return out;
}

}  // namespace cattorus
