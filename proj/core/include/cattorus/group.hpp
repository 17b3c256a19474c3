#pragma once

// Type-erased group elements and group descriptions. Every algebraic
// object in this library (tori, covers, centralisers, automorphism
// 2-groups) is packaged as a Group: a bag of closures over immutable
// data, so instances can be composed and passed around freely.

#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <typeinfo>

#include "cattorus/report.hpp"
#include "cattorus/rng.hpp"

namespace cattorus {

class Elt {
public:
  Elt() = default;

  template <class T>
  static Elt of(T value) {
    Elt e;
    e.payload_ = std::make_shared<T>(std::move(value));
    e.type_ = &typeid(T);
    return e;
  }

  template <class T>
  const T& as() const& {
    if (!payload_)
      throw std::logic_error("Elt: empty element");
    if (*type_ != typeid(T))
      throw std::logic_error(std::string("Elt: expected ") + typeid(T).name() +
                             ", holds " + type_->name());
    return *static_cast<const T*>(payload_.get());
  }

  // On a temporary, hand out a copy: a reference would dangle.
  template <class T>
  T as() && {
    return static_cast<const Elt&>(*this).as<T>();
  }

  bool empty() const { return !payload_; }

private:
  std::shared_ptr<const void> payload_;
  const std::type_info* type_ = &typeid(void);
};

struct Group {
  std::string name;
  Elt id;
  std::function<Elt(const Elt&, const Elt&)> mul;
  std::function<Elt(const Elt&)> inv;
  std::function<bool(const Elt&, const Elt&)> eq;
  std::function<Elt(Rng&)> sample;
  std::function<std::string(const Elt&)> show;
};

Elt gpow(const Group& g, const Elt& a, long long n);

// x^{-1} a x
Elt gconj(const Group& g, const Elt& a, const Elt& x);

// Samples associativity, identity and inverse laws. One CheckResult per law.
Report group_laws(const Group& g, std::uint64_t seed, int trials);

}  // namespace cattorus
