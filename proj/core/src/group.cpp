#include "cattorus/group.hpp"

namespace cattorus {

Elt gpow(const Group& g, const Elt& a, long long n) {
  if (n < 0) return gpow(g, g.inv(a), -n);
  Elt acc = g.id;
  Elt base = a;
  while (n > 0) {
    if (n & 1) acc = g.mul(acc, base);
    base = g.mul(base, base);
    n >>= 1;
  }
  return acc;
}

Elt gconj(const Group& g, const Elt& a, const Elt& x) {
  return g.mul(g.mul(g.inv(x), a), x);
}

Report group_laws(const Group& g, std::uint64_t seed, int trials) {
  Report rep;
  Rng rng(derive_seed(seed, g.name + ".laws"));
  std::string assoc_witness, ident_witness, inverse_witness;
  int assoc_fail = -1, ident_fail = -1, inverse_fail = -1;
  for (int t = 0; t < trials; ++t) {
    Elt a = g.sample(rng), b = g.sample(rng), c = g.sample(rng);
    if (assoc_fail < 0 && !g.eq(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)))) {
      assoc_fail = t;
      assoc_witness = "a=" + g.show(a) + " b=" + g.show(b) + " c=" + g.show(c);
    }
    if (ident_fail < 0 &&
        !(g.eq(g.mul(g.id, a), a) && g.eq(g.mul(a, g.id), a))) {
      ident_fail = t;
      ident_witness = "a=" + g.show(a);
    }
    if (inverse_fail < 0 &&
        !(g.eq(g.mul(a, g.inv(a)), g.id) && g.eq(g.mul(g.inv(a), a), g.id))) {
      inverse_fail = t;
      inverse_witness = "a=" + g.show(a);
    }
  }
  auto emit = [&](const std::string& law, int fail, const std::string& wit) {
    if (fail < 0)
      rep.add(pass_result(g.name + "." + law, trials));
    else
      rep.add(fail_result(g.name + "." + law, fail + 1, wit));
  };
  emit("assoc", assoc_fail, assoc_witness);
  emit("identity", ident_fail, ident_witness);
  emit("inverse", inverse_fail, inverse_witness);
  return rep;
}

}  // namespace cattorus
