#include "cattorus/linebundle.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "cattorus/rng.hpp"

namespace cattorus {

FiberPoint fiber_point(const Lattice& lat, const VecQ& s, const VecQ& t,
                       const VecQ& lift, const Scalar& value) {
  (void)lat;
  if (!(q_frac(lift) == q_frac(s)))
    throw std::invalid_argument("fiber_point: lift does not cover the base");
  return FiberPoint{q_frac(s), q_frac(t), lift, value};
}

FiberPoint relift(const Lattice& lat, const FiberPoint& p, const VecZ& m) {
  CircleElt ph(-lat.j_pair(to_q(m), p.t));
  return FiberPoint{p.s, p.t, p.lift + to_q(m),
                    p.value * Scalar::from_phase(ph)};
}

CircleElt gerbe_cocycle(const Lattice& lat, const VecQ& s_lift,
                        const VecQ& t_lift) {
  return CircleElt(-lat.j_pair(s_lift, t_lift));
}

CircleElt gerbe_associator(const Lattice& lat, const VecQ& r, const VecQ& s,
                           const VecQ& t) {
  return gerbe_cocycle(lat, s, t) - gerbe_cocycle(lat, r + s, t) +
         gerbe_cocycle(lat, r, s + t) - gerbe_cocycle(lat, r, s);
}

PLPath pl_path(std::vector<std::pair<Rational, VecQ>> breakpoints) {
  if (breakpoints.size() < 2)
    throw std::invalid_argument("pl_path: need at least two breakpoints");
  if (!(breakpoints.front().first == 0) || !(breakpoints.back().first == 1))
    throw std::invalid_argument("pl_path: must run from time 0 to time 1");
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    if (!(breakpoints[i].first < breakpoints[i + 1].first))
      throw std::invalid_argument("pl_path: times must increase strictly");
    if (breakpoints[i].second.size() != breakpoints[i + 1].second.size())
      throw std::invalid_argument("pl_path: mixed dimensions");
  }
  return PLPath{std::move(breakpoints)};
}

VecQ pl_eval(const PLPath& p, const Rational& t) {
  if (t < 0 || t > 1) throw std::out_of_range("pl_eval: time outside [0,1]");
  const auto& bp = p.breakpoints;
  std::size_t i = 0;
  while (i + 2 < bp.size() && !(t < bp[i + 1].first)) ++i;
  const Rational& t0 = bp[i].first;
  const Rational& t1 = bp[i + 1].first;
  Rational u = (t - t0) / (t1 - t0);
  return bp[i].second + (bp[i + 1].second - bp[i].second).scaled(u);
}

bool is_loop(const PLPath& p) {
  return is_integral(p.breakpoints.back().second - p.breakpoints.front().second);
}

PLPath constant_path(const VecQ& x) {
  return PLPath{{{Rational(0), x}, {Rational(1), x}}};
}

PLPath straight_loop(const VecZ& m) {
  return PLPath{{{Rational(0), VecQ::zero(m.size())}, {Rational(1), to_q(m)}}};
}

PLPath refine(const PLPath& p, const std::vector<Rational>& extra_times) {
  std::set<Rational> times;
  for (const auto& b : p.breakpoints) times.insert(b.first);
  for (const Rational& t : extra_times)
    if (0 < t && t < 1) times.insert(t);
  std::vector<std::pair<Rational, VecQ>> bp;
  for (const Rational& t : times) bp.emplace_back(t, pl_eval(p, t));
  return PLPath{std::move(bp)};
}

PLPath pl_add(const PLPath& a, const PLPath& b) {
  std::set<Rational> times;
  for (const auto& x : a.breakpoints) times.insert(x.first);
  for (const auto& x : b.breakpoints) times.insert(x.first);
  std::vector<std::pair<Rational, VecQ>> bp;
  for (const Rational& t : times)
    bp.emplace_back(t, pl_eval(a, t) + pl_eval(b, t));
  return PLPath{std::move(bp)};
}

PLPath concat_loops(const PLPath& a, const PLPath& b) {
  VecQ shift = a.breakpoints.back().second - b.breakpoints.front().second;
  std::vector<std::pair<Rational, VecQ>> bp;
  for (const auto& x : a.breakpoints)
    bp.emplace_back(x.first / 2, x.second);
  for (const auto& x : b.breakpoints) {
    if (x.first == 0) continue;
    bp.emplace_back(Rational(1, 2) + x.first / 2, x.second + shift);
  }
  return PLPath{std::move(bp)};
}

CircleElt holonomy(const Lattice& lat, const PLPath& f, const PLPath& g) {
  if (!is_loop(f) || !is_loop(g))
    throw std::invalid_argument("holonomy: path does not close up");
  std::set<Rational> times;
  for (const auto& x : f.breakpoints) times.insert(x.first);
  for (const auto& x : g.breakpoints) times.insert(x.first);
  std::vector<Rational> ts(times.begin(), times.end());
  Rational total(0);
  VecQ f_prev = pl_eval(f, ts[0]);
  VecQ g_prev = pl_eval(g, ts[0]);
  for (std::size_t i = 1; i < ts.size(); ++i) {
    VecQ f_cur = pl_eval(f, ts[i]);
    VecQ g_cur = pl_eval(g, ts[i]);
    // Both legs are affine on the segment, so the integrand J(f', g) is
    // affine in t and the trapezoid value is exact.
    total += lat.j_pair(f_cur - f_prev, g_prev + g_cur) / 2;
    f_prev = f_cur;
    g_prev = g_cur;
  }
  VecQ dg = g.breakpoints.back().second - g.breakpoints.front().second;
  total -= lat.j_pair(f.breakpoints.front().second, dg);
  return CircleElt(total);
}

LooPoint looijenga_transport(const Lattice& lat, const LooPoint& p,
                             const VecZ& m) {
  VecQ mq = to_q(m);
  Rational drop = lat.i_pair(mq, mq) / 2 + lat.i_pair(mq, p.x_tau);
  return LooPoint{p.x_tau + mq, p.x_one,
                  p.phase - CircleElt(lat.i_pair(mq, p.x_one)),
                  p.qexp - drop};
}

LooPoint looijenga_from_inertia(const Lattice& lat, const VecQ& x,
                                const VecQ& t_lift, const CircleElt& z) {
  return LooPoint{x, t_lift, z, -lat.i_pair(x, x) / 2};
}

ThetaSeries theta_series(const Lattice& lat, long long max_half_norm) {
  ThetaSeries out{max_half_norm, {}};
  if (lat.rank() == 0) {
    out.counts.assign(static_cast<std::size_t>(max_half_norm) + 1, Int(0));
    out.counts[0] = Int(1);
    return out;
  }
  out.counts = theta_counts(lat, max_half_norm);
  return out;
}

std::string theta_export(const ThetaSeries& s) {
  std::ostringstream os;
  for (std::size_t k = 0; k < s.counts.size(); ++k)
    os << k << "\t" << s.counts[k] << "\n";
  return os.str();
}

std::vector<WeightedTerm> theta_series_weighted(const Lattice& lat,
                                                long long max_half_norm,
                                                const VecZ& shift,
                                                const Int& k) {
  auto shells = vectors_by_half_norm(lat, max_half_norm);
  std::map<std::pair<long long, std::string>, WeightedTerm> acc;
  for (std::size_t hn = 0; hn < shells.size(); ++hn) {
    for (const VecZ& m : shells[hn]) {
      VecZ w = shift - lat.i_sharp(m).scaled(k);
      auto key = std::make_pair(static_cast<long long>(hn), show(w));
      auto it = acc.find(key);
      if (it == acc.end())
        acc.emplace(key, WeightedTerm{Int(hn), w, Int(1)});
      else
        it->second.count += 1;
    }
  }
  std::vector<WeightedTerm> out;
  out.reserve(acc.size());
  for (auto& [key, term] : acc) out.push_back(std::move(term));
  return out;
}

std::string theta_export(const std::vector<WeightedTerm>& terms) {
  std::ostringstream os;
  for (const WeightedTerm& t : terms)
    os << t.half_norm << "\t" << show(t.weight) << "\t" << t.count << "\n";
  return os.str();
}

VecZ orbit_representative(const Lattice& lat, const Int& k,
                          const VecZ& weight) {
  if (k == 0) return weight;
  MatQ ki = to_q(lat.i).scaled(Rational(k));
  VecQ z = inverse(ki) * to_q(weight);
  VecZ steps = to_z(z - q_frac(z));
  return weight - lat.i_sharp(steps).scaled(k);
}

std::vector<WeightOrbit> class_function_decompose(
    const Lattice& lat, const Int& k,
    const std::vector<std::pair<VecZ, Int>>& weights) {
  std::map<std::string, WeightOrbit> acc;
  std::vector<std::string> order;
  for (const auto& [w, mult] : weights) {
    VecZ rep = orbit_representative(lat, k, w);
    std::string key = show(rep);
    auto it = acc.find(key);
    if (it == acc.end()) {
      acc.emplace(key, WeightOrbit{rep, {w}, mult, true, false});
      order.push_back(key);
    } else {
      it->second.members.push_back(w);
      if (!(it->second.multiplicity == mult)) it->second.constant = false;
    }
  }
  std::vector<WeightOrbit> out;
  out.reserve(order.size());
  for (const std::string& key : order) {
    WeightOrbit& o = acc.at(key);
    o.closed = k == 0 || o.members.size() >= 2;
    out.push_back(std::move(o));
  }
  return out;
}

namespace {

PLPath random_loop_at(Rng& rng, const Lattice& lat, const VecQ& start,
                      int segments) {
  std::size_t r = lat.rank();
  std::vector<std::pair<Rational, VecQ>> bp;
  bp.emplace_back(Rational(0), start);
  for (int i = 1; i < segments; ++i)
    bp.emplace_back(Rational(4 * i + rng.int_in(0, 3), 4 * segments),
                    rng.vec_q(r, 2, 8));
  bp.emplace_back(Rational(1), start + to_q(rng.vec_z(r, 2)));
  return pl_path(std::move(bp));
}

PLPath random_loop(Rng& rng, const Lattice& lat, int segments) {
  return random_loop_at(rng, lat, rng.vec_q(lat.rank(), 2, 8), segments);
}

std::vector<Rational> random_times(Rng& rng, int n) {
  std::vector<Rational> out;
  for (int i = 0; i < n; ++i)
    out.emplace_back(rng.int_in(1, 23), 24);
  return out;
}

}  // namespace

Report gerbe_check(const Lattice& lat, std::uint64_t seed, int trials) {
  std::string p = "bundle." + lat.name;
  std::size_t r = lat.rank();
  Report out;

  {
    std::string id = p + ".cocycle_integral";
    Rng rng(derive_seed(seed, id));
    CheckResult res = pass_result(id, trials);
    for (int t = 0; t < trials; ++t) {
      CircleElt c = gerbe_cocycle(lat, to_q(rng.vec_z(r, 6)),
                                  to_q(rng.vec_z(r, 6)));
      if (!c.is_zero()) {
        res = fail_result(id, t + 1, "phase " + show(c));
        break;
      }
    }
    out.add(res);
  }

  {
    std::string id = p + ".cocycle_bilinear";
    Rng rng(derive_seed(seed, id));
    CheckResult res = pass_result(id, trials);
    for (int t = 0; t < trials && res.status == Status::Pass; ++t) {
      VecQ a = rng.vec_q(r, 3, 10);
      VecQ b = rng.vec_q(r, 3, 10);
      VecQ c = rng.vec_q(r, 3, 10);
      if (!(gerbe_cocycle(lat, a + b, c) ==
            gerbe_cocycle(lat, a, c) + gerbe_cocycle(lat, b, c)))
        res = fail_result(id, t + 1, "first slot not additive");
      else if (!(gerbe_cocycle(lat, a, b + c) ==
                 gerbe_cocycle(lat, a, b) + gerbe_cocycle(lat, a, c)))
        res = fail_result(id, t + 1, "second slot not additive");
    }
    out.add(res);
  }

  {
    std::string id = p + ".cocycle_coboundary";
    Rng rng(derive_seed(seed, id));
    CheckResult res = pass_result(id, trials);
    for (int t = 0; t < trials; ++t) {
      CircleElt a = gerbe_associator(lat, rng.vec_q(r, 3, 10),
                                     rng.vec_q(r, 3, 10), rng.vec_q(r, 3, 10));
      if (!a.is_zero()) {
        res = fail_result(id, t + 1, "associator " + show(a));
        break;
      }
    }
    out.add(res);
  }

  {
    std::string id = p + ".relift_consistent";
    Rng rng(derive_seed(seed, id));
    CheckResult res = pass_result(id, trials);
    for (int t = 0; t < trials && res.status == Status::Pass; ++t) {
      VecQ x = rng.vec_q(r, 2, 12);
      VecQ tq = q_frac(rng.vec_q(r, 2, 12));
      Scalar val(Rational(rng.int_in(1, 5), rng.int_in(1, 5)), rng.circle());
      FiberPoint pt = fiber_point(lat, q_frac(x), tq, x, val);
      VecZ m = rng.vec_z(r, 4);
      VecZ mp = rng.vec_z(r, 4);
      VecZ n = rng.vec_z(r, 4);
      FiberPoint moved = relift(lat, pt, m);
      CircleElt step = gerbe_cocycle(lat, x + to_q(m), tq) -
                       gerbe_cocycle(lat, x, tq);
      if (!(moved.value == pt.value * Scalar::from_phase(step)))
        res = fail_result(id, t + 1, "transition disagrees with cocycle");
      else if (!(relift(lat, moved, mp).value ==
                 relift(lat, pt, m + mp).value))
        res = fail_result(id, t + 1, "relifts do not compose");
      else if (!(CircleElt(-lat.j_pair(to_q(m), tq + to_q(n))) ==
                 CircleElt(-lat.j_pair(to_q(m), tq))))
        res = fail_result(id, t + 1, "phase depends on the second lift");
    }
    out.add(res);
  }

  {
    std::string id = p + ".lift_guard";
    Rng rng(derive_seed(seed, id));
    CheckResult res = pass_result(id, trials);
    for (int t = 0; t < trials; ++t) {
      VecQ x = rng.vec_q(r, 2, 12);
      VecQ off = VecQ::zero(r);
      off[0] = Rational(1, 5);
      VecQ bad = q_frac(x + off);
      bool thrown = false;
      try {
        fiber_point(lat, bad, VecQ::zero(r), x, Scalar::one());
      } catch (const std::invalid_argument&) {
        thrown = true;
      }
      if (!thrown) {
        res = fail_result(id, t + 1, "mismatched lift accepted");
        break;
      }
    }
    out.add(res);
  }

  return out;
}

Report holonomy_check(const Lattice& lat, std::uint64_t seed, int trials) {
  std::string p = "bundle." + lat.name;
  std::size_t r = lat.rank();
  Report out;

  {
    std::string id = p + ".hol_constant";
    Rng rng(derive_seed(seed, id));
    CheckResult res = pass_result(id, trials);
    for (int t = 0; t < trials; ++t) {
      CircleElt h = holonomy(lat, constant_path(rng.vec_q(r, 2, 12)),
                             constant_path(rng.vec_q(r, 2, 12)));
      if (!h.is_zero()) {
        res = fail_result(id, t + 1, "phase " + show(h));
        break;
      }
    }
    out.add(res);
  }

  {
    std::string id = p + ".hol_straight";
    Rng rng(derive_seed(seed, id));
    CheckResult res = pass_result(id, trials);
    for (int t = 0; t < trials; ++t) {
      VecZ m = rng.vec_z(r, 4);
      VecZ n = rng.vec_z(r, 4);
      CircleElt h = holonomy(lat, straight_loop(m), straight_loop(n));
      if (!(h == CircleElt(Rational(lat.j_pair(m, n)) / 2))) {
        res = fail_result(id, t + 1,
                          "m=" + show(m) + " n=" + show(n) + " got " + show(h));
        break;
      }
    }
    out.add(res);
  }

  {
    std::string id = p + ".hol_refine";
    Rng rng(derive_seed(seed, id));
    CheckResult res = pass_result(id, trials);
    for (int t = 0; t < trials; ++t) {
      PLPath f = random_loop(rng, lat, 3);
      PLPath g = random_loop(rng, lat, 2);
      CircleElt base = holonomy(lat, f, g);
      CircleElt fine = holonomy(lat, refine(f, random_times(rng, 3)),
                                refine(g, random_times(rng, 3)));
      if (!(base == fine)) {
        res = fail_result(id, t + 1, "refinement changed the value");
        break;
      }
    }
    out.add(res);
  }

  {
    std::string id = p + ".hol_product";
    Rng rng(derive_seed(seed, id));
    CheckResult res = pass_result(id, trials);
    for (int t = 0; t < trials && res.status == Status::Pass; ++t) {
      PLPath f1 = random_loop(rng, lat, 2);
      PLPath f2 = random_loop(rng, lat, 3);
      PLPath g = random_loop(rng, lat, 2);
      if (!(holonomy(lat, pl_add(f1, f2), g) ==
            holonomy(lat, f1, g) + holonomy(lat, f2, g)))
        res = fail_result(id, t + 1, "not additive in the first loop");
      else if (!(holonomy(lat, g, pl_add(f1, f2)) ==
                 holonomy(lat, g, f1) + holonomy(lat, g, f2)))
        res = fail_result(id, t + 1, "not additive in the second loop");
    }
    out.add(res);
  }

  {
    // Concatenation needs matching base points in T on both legs; the
    // leftover cross terms are integral pairings of coweights.
    std::string id = p + ".hol_concat";
    Rng rng(derive_seed(seed, id));
    CheckResult res = pass_result(id, trials);
    for (int t = 0; t < trials; ++t) {
      PLPath f1 = random_loop(rng, lat, 2);
      PLPath g1 = random_loop(rng, lat, 2);
      PLPath f2 = random_loop_at(
          rng, lat, f1.breakpoints.back().second + to_q(rng.vec_z(r, 2)), 2);
      PLPath g2 = random_loop_at(
          rng, lat, g1.breakpoints.back().second + to_q(rng.vec_z(r, 2)), 2);
      CircleElt whole = holonomy(lat, concat_loops(f1, f2),
                                 concat_loops(g1, g2));
      CircleElt parts = holonomy(lat, f1, g1) + holonomy(lat, f2, g2);
      if (!(whole == parts)) {
        res = fail_result(id, t + 1, "concatenation not additive");
        break;
      }
    }
    out.add(res);
  }

  {
    std::string id = p + ".hol_loop_guard";
    Rng rng(derive_seed(seed, id));
    CheckResult res = pass_result(id, trials);
    for (int t = 0; t < trials; ++t) {
      VecQ start = rng.vec_q(r, 2, 12);
      VecQ end = start + to_q(rng.vec_z(r, 2));
      end[0] = end[0] + Rational(1, 5);
      PLPath open_path =
          pl_path({{Rational(0), start}, {Rational(1), end}});
      bool thrown = false;
      try {
        holonomy(lat, open_path, constant_path(VecQ::zero(r)));
      } catch (const std::invalid_argument&) {
        thrown = true;
      }
      if (!thrown) {
        res = fail_result(id, t + 1, "open path accepted");
        break;
      }
    }
    out.add(res);
  }

  return out;
}

Report looijenga_check(const Lattice& lat, std::uint64_t seed, int trials) {
  std::string p = "loo." + lat.name;
  std::size_t r = lat.rank();
  Report out;

  auto sample_point = [&lat, r](Rng& rng) {
    return LooPoint{rng.vec_q(r, 2, 12), rng.vec_q(r, 2, 12), rng.circle(),
                    rng.rat(3, 12)};
  };

  {
    std::string id = p + ".transport_unit";
    Rng rng(derive_seed(seed, id));
    CheckResult res = pass_result(id, trials);
    for (int t = 0; t < trials; ++t) {
      LooPoint pt = sample_point(rng);
      if (!(looijenga_transport(lat, pt, VecZ::zero(r)) == pt)) {
        res = fail_result(id, t + 1, "m=0 moves the point");
        break;
      }
    }
    out.add(res);
  }

  {
    std::string id = p + ".transport_cocycle";
    Rng rng(derive_seed(seed, id));
    CheckResult res = pass_result(id, trials);
    for (int t = 0; t < trials; ++t) {
      LooPoint pt = sample_point(rng);
      VecZ m = rng.vec_z(r, 4);
      VecZ mp = rng.vec_z(r, 4);
      LooPoint two = looijenga_transport(lat, looijenga_transport(lat, pt, m),
                                         mp);
      LooPoint one = looijenga_transport(lat, pt, m + mp);
      if (!(two == one)) {
        res = fail_result(id, t + 1, "m=" + show(m) + " m'=" + show(mp));
        break;
      }
    }
    out.add(res);
  }

  {
    // The inertia relation (x+m, t, z) ~ (x, t, z + [I(m,t~)]) must land
    // on transport-related points, with exact q-exponent bookkeeping.
    std::string id = p + ".inertia_intertwined";
    Rng rng(derive_seed(seed, id));
    CheckResult res = pass_result(id, trials);
    for (int t = 0; t < trials; ++t) {
      VecQ x = rng.vec_q(r, 2, 12);
      VecQ tl = rng.vec_q(r, 2, 12);
      CircleElt z = rng.circle();
      VecZ m = rng.vec_z(r, 4);
      LooPoint lhs = looijenga_from_inertia(lat, x + to_q(m), tl, z);
      CircleElt zr = z + CircleElt(lat.i_pair(to_q(m), tl));
      LooPoint rhs = looijenga_transport(
          lat, looijenga_from_inertia(lat, x, tl, zr), m);
      if (!(lhs == rhs)) {
        res = fail_result(id, t + 1, "relation routes disagree");
        break;
      }
    }
    out.add(res);
  }

  return out;
}

Report theta_check(const Lattice& lat, long long max_half_norm,
                   std::uint64_t seed, int trials) {
  std::string p = "theta." + lat.name;
  Report out;
  if (!lat.is_positive_definite()) {
    out.add(skip_result(p + ".series", "indefinite Gram"));
    return out;
  }
  std::size_t r = lat.rank();
  auto shells = vectors_by_half_norm(lat, max_half_norm);
  ThetaSeries series = theta_series(lat, max_half_norm);

  {
    std::string id = p + ".series_counts";
    CheckResult res = pass_result(id, 1);
    if (series.counts.size() != shells.size())
      res = fail_result(id, 1, "length mismatch");
    else if (!(series.counts[0] == 1))
      res = fail_result(id, 1, "constant term " + show(series.counts[0]));
    else
      for (std::size_t k = 0; k < shells.size(); ++k)
        if (!(series.counts[k] == Int(shells[k].size()))) {
          res = fail_result(id, 1, "shell " + std::to_string(k));
          break;
        }
    out.add(res);
  }

  {
    // Half norms are the J-diagonal, which is half the even Gram
    // diagonal, so every q-exponent of the series is an integer.
    std::string id = p + ".grading_integral";
    CheckResult res = pass_result(id, 1);
    for (std::size_t k = 0; k < shells.size() && res.status == Status::Pass;
         ++k)
      for (const VecZ& v : shells[k])
        if (!(lat.half_norm(v) == Int(k)) ||
            !(lat.i_pair(v, v) == Int(2 * k))) {
          res = fail_result(id, 1, "vector " + show(v));
          break;
        }
    out.add(res);
  }

  {
    std::string id = p + ".isometry_shells";
    Rng rng(derive_seed(seed, id));
    std::vector<MatZ> isom = isometry_group(lat);
    int picks = std::min<int>(6, static_cast<int>(isom.size()));
    CheckResult res = pass_result(id, picks);
    for (int t = 0; t < picks && res.status == Status::Pass; ++t) {
      const MatZ& f = isom[static_cast<std::size_t>(
          rng.int_in(0, static_cast<long long>(isom.size()) - 1))];
      for (std::size_t k = 0; k < shells.size() && res.status == Status::Pass;
           ++k)
        for (const VecZ& v : shells[k])
          if (!(lat.half_norm(f * v) == Int(k))) {
            res = fail_result(id, t + 1, "isometry breaks shell " +
                                             std::to_string(k));
            break;
          }
    }
    out.add(res);
  }

  {
    std::string id = p + ".weighted_consistent";
    Rng rng(derive_seed(seed, id));
    CheckResult res = pass_result(id, trials);
    for (int t = 0; t < trials && res.status == Status::Pass; ++t) {
      VecZ shift = rng.vec_z(r, 3);
      Int k(rng.int_in(1, 3));
      auto terms = theta_series_weighted(lat, max_half_norm, shift, k);
      std::vector<Int> sums(shells.size(), Int(0));
      for (const WeightedTerm& term : terms) {
        sums[static_cast<std::size_t>(term.half_norm)] += term.count;
        if (!(orbit_representative(lat, k, term.weight) ==
              orbit_representative(lat, k, shift))) {
          res = fail_result(id, t + 1, "weight off the shift orbit");
          break;
        }
      }
      if (res.status == Status::Pass && !(sums == series.counts))
        res = fail_result(id, t + 1, "weighted sums disagree with counts");
    }
    out.add(res);
  }

  {
    std::string id = p + ".export_shape";
    CheckResult res = pass_result(id, 1);
    std::istringstream in(theta_export(series));
    std::string line;
    long long k = 0;
    while (std::getline(in, line)) {
      std::ostringstream want;
      want << k << "\t" << series.counts[static_cast<std::size_t>(k)];
      if (line != want.str()) {
        res = fail_result(id, 1, "line " + std::to_string(k));
        break;
      }
      ++k;
    }
    if (res.status == Status::Pass && k != max_half_norm + 1)
      res = fail_result(id, 1, "line count " + std::to_string(k));
    out.add(res);
  }

  return out;
}

Report class_function_check(const Lattice& lat, std::uint64_t seed,
                            int trials) {
  std::string p = "theta." + lat.name;
  std::size_t r = lat.rank();
  Report out;

  {
    std::string id = p + ".orbit_rep_stable";
    Rng rng(derive_seed(seed, id));
    CheckResult res = pass_result(id, trials);
    for (int t = 0; t < trials && res.status == Status::Pass; ++t) {
      VecZ w = rng.vec_z(r, 8);
      VecZ m = rng.vec_z(r, 4);
      Int k(rng.int_in(1, 3));
      VecZ moved = w - lat.i_sharp(m).scaled(k);
      if (!(orbit_representative(lat, k, moved) ==
            orbit_representative(lat, k, w)))
        res = fail_result(id, t + 1, "shift changes the representative");
      else if (!(orbit_representative(lat, Int(0), w) == w))
        res = fail_result(id, t + 1, "k=0 representative moved");
    }
    out.add(res);
  }

  {
    std::string id = p + ".orbit_k0_singletons";
    Rng rng(derive_seed(seed, id));
    CheckResult res = pass_result(id, trials);
    for (int t = 0; t < trials && res.status == Status::Pass; ++t) {
      std::set<std::string> seen;
      std::vector<std::pair<VecZ, Int>> table;
      for (int i = 0; i < 5; ++i) {
        VecZ w = rng.vec_z(r, 6);
        if (seen.insert(show(w)).second)
          table.emplace_back(w, Int(rng.int_in(1, 4)));
      }
      auto orbits = class_function_decompose(lat, Int(0), table);
      bool ok = orbits.size() == table.size();
      for (const WeightOrbit& o : orbits)
        ok = ok && o.members.size() == 1 && o.constant && o.closed &&
             o.rep == o.members[0];
      if (!ok) res = fail_result(id, t + 1, "k=0 orbit misbehaves");
    }
    out.add(res);
  }

  {
    // A table spread along one orbit decomposes into that orbit with a
    // constant multiplicity; bumping a single entry is detected.
    std::string id = p + ".orbit_multiplicity";
    Rng rng(derive_seed(seed, id));
    CheckResult res = pass_result(id, trials);
    for (int t = 0; t < trials && res.status == Status::Pass; ++t) {
      Int k(rng.int_in(1, 2));
      VecZ rep = orbit_representative(lat, k, rng.vec_z(r, 8));
      Int mult(rng.int_in(1, 5));
      std::vector<std::pair<VecZ, Int>> table;
      for (const VecZ& m : f2_vectors(r))
        table.emplace_back(rep - lat.i_sharp(m).scaled(k), mult);
      auto orbits = class_function_decompose(lat, k, table);
      if (orbits.size() != 1 || !orbits[0].constant || !orbits[0].closed ||
          !(orbits[0].rep == rep) ||
          orbits[0].members.size() != table.size()) {
        res = fail_result(id, t + 1, "orbit not reassembled");
        continue;
      }
      std::size_t bump =
          static_cast<std::size_t>(rng.int_in(0, table.size() - 1));
      table[bump].second += 1;
      auto broken = class_function_decompose(lat, k, table);
      if (!(broken.size() == 1 && !broken[0].constant))
        res = fail_result(id, t + 1, "uneven multiplicity unnoticed");
    }
    out.add(res);
  }

  return out;
}

}  // namespace cattorus
