#pragma once

// Loop objects in the categorical torus: windowed integer cochains, the
// full and small inertia 2-groupoids, the strictification arrow, the two
// presentations of the inertia groupoid, and the t//H model.
//
// Cochains Z -> M are stored on a finite window [-r, r]. A 2-cocycle is
// stored through its generating 1-cochain alpha (d alpha = cocycle,
// alpha(1) = 0), which determines it uniquely.

#include <functional>
#include <stdexcept>
#include <vector>

#include "cattorus/cattorus.hpp"
#include "cattorus/xmod.hpp"

namespace cattorus {

// Checks evaluate inside [-8, 8]; stored windows are wide enough that
// boundary evaluation and a few compositions never fall off the edge.
inline constexpr int kInertiaWindow = 8;
inline constexpr int kWinRadius = 18;

template <class T>
struct Win {
  int r = 0;
  std::vector<T> v;  // v[a + r], indices a in [-r, r]

  static Win constant(int radius, const T& t) {
    return Win{radius, std::vector<T>(2 * radius + 1, t)};
  }
  const T& at(long long a) const {
    if (a < -r || a > r) throw std::out_of_range("cochain window");
    return v[static_cast<std::size_t>(a + r)];
  }
  T& at(long long a) {
    if (a < -r || a > r) throw std::out_of_range("cochain window");
    return v[static_cast<std::size_t>(a + r)];
  }
  bool operator==(const Win&) const = default;
};

using WinZ = Win<VecZ>;
using WinU = Win<CircleElt>;

// d mu (a, b) = mu(a) + mu(b) - mu(a+b).
template <class T>
T d1(const Win<T>& mu, long long a, long long b) {
  return mu.at(a) + mu.at(b) - mu.at(a + b);
}

template <class T>
Win<T> win_add(const Win<T>& a, const Win<T>& b) {
  Win<T> out = a;
  for (int i = -a.r; i <= a.r; ++i) out.at(i) = a.at(i) + b.at(i);
  return out;
}

// A 2-cocycle through its generating cochain; gen.at(1) is zero.
template <class T>
struct Gen2 {
  Win<T> gen;
  T at(long long a, long long b) const { return d1(gen, a, b); }
  bool operator==(const Gen2&) const = default;
};

// The unique 1-cochain with the given boundary and value at 1:
// mu(0) = gamma(0,0), mu(a+1) = mu(a) + mu(1) - gamma(a,1).
template <class T>
Win<T> cochain_from_boundary(
    const std::function<T(long long, long long)>& gamma, const T& at1,
    int radius) {
  Win<T> mu = Win<T>::constant(radius, at1);
  mu.at(0) = gamma(0, 0);
  if (radius >= 1) mu.at(1) = at1;
  for (long long a = 1; a < radius; ++a)
    mu.at(a + 1) = mu.at(a) + at1 - gamma(a, 1);
  for (long long a = 0; a > -radius; --a)
    mu.at(a - 1) = mu.at(a) - at1 + gamma(a - 1, 1);
  return mu;
}

// Normal form of a 2-cocycle given as raw values: rebuilds the
// generating cochain, then insists the boundary reproduces the input
// everywhere it is defined, including gamma(a,0) = gamma(0,0) = gamma(0,a).
template <class T>
Gen2<T> cocycle_normalize(const std::function<T(long long, long long)>& gamma,
                          const T& zero, int radius) {
  Gen2<T> out{cochain_from_boundary<T>(gamma, zero, radius)};
  for (long long a = -radius; a <= radius; ++a)
    for (long long b = -radius; b <= radius; ++b) {
      if (a + b < -radius || a + b > radius) continue;
      if (!(out.at(a, b) == gamma(a, b)))
        throw std::invalid_argument("cocycle_normalize: inconsistent data");
    }
  return out;
}

// Full model. An object is (x, gamma, c); the 1-arrow (y, mu, w) out of
// it lands on (x + mu(1), gamma + d mu, c') with
//   c'(a,b) = c(a,b) + dw(a,b) + ab * [J(mu(1), x)].
struct FullObj {
  VecQ x;
  Gen2<VecZ> gamma;
  Gen2<CircleElt> c;
  bool operator==(const FullObj&) const = default;
};

struct FullArrow {
  FullObj src;
  VecQ y;
  WinZ mu;
  WinU w;
};

FullObj full_target(const Lattice& lat, const FullArrow& a);
FullArrow full_compose(const Lattice& lat, const FullArrow& a,
                       const FullArrow& b);
// The 2-arrow labelled n re-hangs the same cylinder on y + n with
// w'(a) = w(a) + a * [I(x, n)]; the target object does not move.
FullArrow two_arrow_shift(const Lattice& lat, const FullArrow& a,
                          const VecZ& n);

// Small model.
struct InertiaObj {
  VecQ x;
  bool operator==(const InertiaObj&) const = default;
};

struct Inertia1Arrow {
  VecQ x;
  VecQ y;
  VecZ m;
  CircleElt w;
  bool operator==(const Inertia1Arrow&) const = default;
};

struct Inertia2Arrow {
  Inertia1Arrow a;
  VecZ n;
  CircleElt u;
};

Inertia1Arrow compose_1arrows(const Inertia1Arrow& a, const Inertia1Arrow& b);
Inertia1Arrow two_arrow_target(const Lattice& lat, const Inertia2Arrow& s);

// The connecting arrow from (x, 0, 1) to a full object, for a chosen
// (y, z): mu is the generating cochain of gamma, dw = c with w(1) = z,
// and the transformation's component at a carries the label
//   beta(a) = w(a) - [J(a x + lambda(a), y)].
struct Strictification {
  InertiaObj obj;
  Inertia1Arrow small;
  FullArrow arrow;
  WinU beta;
};

Strictification strictify(const Lattice& lat, const FullObj& obj,
                          const VecQ& y = VecQ(), const CircleElt& z = CircleElt());

// Presentation (i): arrows [t, y, w] with (t, y+n, w) ~ (t, y, w - [I(x,n)]);
// presentation (ii): arrows [x, s, z] with (x+m, s, z) ~ (x, s, z + [I(m,y)]).
// Canonical representatives reduce the marked coordinate into [0,1)^rank.
struct ArrowClassI {
  VecQ t;
  VecQ y;
  CircleElt w;
  bool operator==(const ArrowClassI&) const = default;
};

struct ArrowClassII {
  VecQ x;
  VecQ s;
  CircleElt z;
  bool operator==(const ArrowClassII&) const = default;
};

ArrowClassI class_i(const Lattice& lat, const VecQ& x_lift, const VecQ& y,
                    const CircleElt& w);
ArrowClassII class_ii(const Lattice& lat, const VecQ& x, const VecQ& s_lift,
                      const CircleElt& z);
ArrowClassI compose_i(const Lattice& lat, const ArrowClassI& a,
                      const ArrowClassI& b);
ArrowClassII compose_ii(const Lattice& lat, const ArrowClassII& a,
                        const ArrowClassII& b);

// [t, y, w] -> [x, exp(y), w - [I(x, y)]], the groupoid isomorphism
// between the presentations.
ArrowClassII presentation_iso(const Lattice& lat, const ArrowClassI& a);

// H = (T x U(1)) |x coweights, with
//   (s, z, m)(s', z', m') = (s s', z + z' - [I_sharp(m)(s')], m + m').
struct HElt {
  VecQ s;
  CircleElt z;
  VecZ m;
  bool operator==(const HElt&) const = default;
};

std::string show(const HElt& h);
Group make_H(const Lattice& lat);

// Change of fiber trivialization from lift x to lift x + m:
// (t, u) -> (t, u - [shear(t)]) with shear = I_sharp(m).
struct TrivChange {
  VecZ shear;
};

TrivChange trivialization_change(const Lattice& lat, const VecZ& m);
std::pair<VecQ, CircleElt> triv_apply(const TrivChange& ch, const VecQ& t,
                                      const CircleElt& u);

// Report-producing verifications, all exact on sampled data.
Report cochain_lemma_check(const Lattice& lat, std::uint64_t seed, int trials);
Report full_model_check(const Lattice& lat, std::uint64_t seed, int trials);
Report strictification_check(const Lattice& lat, std::uint64_t seed,
                             int trials);
Report presentations_isomorphism(const Lattice& lat, std::uint64_t seed,
                                 int trials);
Report t_mod_H_equivalence(const Lattice& lat, std::uint64_t seed, int trials);
Report trivialization_check(const Lattice& lat, std::uint64_t seed,
                            int trials);

}  // namespace cattorus
