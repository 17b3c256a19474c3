#pragma once

// Crossed modules and their morphisms. A crossed module is a boundary
// homomorphism bnd: fiber -> base together with a right action of the
// base on the fiber, subject to
//   CM1:  bnd(a^x) = x^{-1} bnd(a) x
//   CM2:  b^{bnd(a)} = a^{-1} b a.
// Such data presents a strict 2-group whose arrows (x, a): x -> x*bnd(a)
// compose by multiplying labels and tensor with a twist by the action.
//
// Morphisms come in two strengths: strict pairs (p0, p1), and weak
// morphisms carrying a 2-cochain kappa measuring the failure of p0 to be
// multiplicative, subject to axioms W1-W5.

#include <functional>
#include <memory>
#include <string>

#include "cattorus/group.hpp"

namespace cattorus {

struct XMod {
  std::string name;
  Group base;
  Group fiber;
  std::function<Elt(const Elt& a, const Elt& x)> act;  // a^x
  std::function<Elt(const Elt& a)> bnd;
};

// Arrow (src, label): src -> src * bnd(label) in the associated 2-group.
struct SArrow {
  Elt src;
  Elt label;
};

Elt s_target(const XMod& xm, const SArrow& a);

// Vertical composition; requires s_target(first) == then.src.
SArrow s_compose(const XMod& xm, const SArrow& first, const SArrow& then);

// Tensor (monoidal) product: (x,a) (x) (y,b) = (xy, a^y * b).
SArrow s_tensor(const XMod& xm, const SArrow& a, const SArrow& b);

bool s_eq(const XMod& xm, const SArrow& a, const SArrow& b);
std::string s_show(const XMod& xm, const SArrow& a);

// Group laws for base and fiber, action and boundary homomorphism
// properties, and CM1/CM2, each sampled `trials` times.
Report xmod_axioms(const XMod& xm, std::uint64_t seed, int trials);

// Interchange law and strict associativity of the tensor product.
Report monoidal_coherence(const XMod& xm, std::uint64_t seed, int trials);

struct StrictMor {
  XMod src;
  XMod tgt;
  std::function<Elt(const Elt&)> p0;
  std::function<Elt(const Elt&)> p1;
};

// p0/p1 homomorphisms, square with boundaries, equivariance; sampled.
Report strict_check(const StrictMor& f, std::uint64_t seed, int trials,
                    const std::string& id_prefix);

struct WeakMorphism {
  XMod src;
  XMod tgt;
  std::function<Elt(const Elt&)> p0;
  std::function<Elt(const Elt&)> p1;
  // kappa(x, y) lives in tgt.fiber
  std::function<Elt(const Elt&, const Elt&)> kappa;
  // set by constructors that know the inverse in closed form
  std::shared_ptr<const WeakMorphism> inverse;
};

WeakMorphism strict_to_weak(const StrictMor& f);

// The associator kappa_{x,y,z} = kappa(x,y)^{p0(z)} * kappa(xy, z);
// by W4 it also equals kappa(y,z) * kappa(x, yz).
Elt weak_kappa3(const WeakMorphism& f, const Elt& x, const Elt& y,
                const Elt& z);

// W1-W5 sampled on src-elements; when an inverse is attached, also checks
// that both composites act as the identity on sampled points.
Report weak_check(const WeakMorphism& f, std::uint64_t seed, int trials,
                  const std::string& id_prefix);

// Composite f after g; kappa composes as
//   f1(g.kappa(x,y)) * f.kappa3(g0(x), g0(y), bnd(g.kappa(x,y))).
WeakMorphism weak_compose(const WeakMorphism& f, const WeakMorphism& g);

// Induced functor on arrows: (x, a) -> (p0(x), p1(a) * kappa(x, bnd a)).
SArrow weak_apply(const WeakMorphism& f, const SArrow& arrow);

// Extensional equality on sampled base points, fiber points and pairs.
bool weak_eq_sampled(const WeakMorphism& f, const WeakMorphism& g,
                     std::uint64_t seed, int points);

}  // namespace cattorus
