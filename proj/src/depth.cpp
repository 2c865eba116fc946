#include "cusplat/depth.hpp"

#include <algorithm>
#include <set>

namespace cusplat {

namespace {

// Ring elements with norm <= bound (box enumeration).
std::vector<Scalar> elements_norm_up_to(Ring r, const Int& bound) {
  std::vector<Scalar> out;
  for (Int n = 0; n <= bound; ++n) {
    auto batch = all_of_norm(r, n);
    out.insert(out.end(), batch.begin(), batch.end());
  }
  return out;
}

bool point_less(const Form& f, const HeisPoint& a, const HeisPoint& b) {
  Vec va = to_affine(f, a), vb = to_affine(f, b);
  for (size_t i = 0; i < va.size(); ++i) {
    if (va[i] < vb[i]) return true;
    if (vb[i] < va[i]) return false;
  }
  return false;
}

Int norm_int(const Scalar& q) {
  Rat n = q.norm();
  if (!is_integer(n)) throw std::logic_error("norm of non-integral element");
  return num(n);
}

// Vertical bounds of the prism per t-axis.
std::array<std::pair<Rat, Rat>, 3> vertical_bounds(const Form& f,
                                                   const Polytope& prism) {
  std::array<std::pair<Rat, Rat>, 3> out;
  int base_dim = f.ring.kind == RingKind::Quaternion ? 4 : 2;
  int axes = f.ring.kind == RingKind::Quaternion ? 3 : 1;
  for (int a = 0; a < axes; ++a) {
    bool first = true;
    for (const auto& v : prism.verts) {
      const Surd& tv = v[base_dim + a];
      // Lattice prisms carry pure coordinates: rational, or a pure multiple
      // of sqrt(d) whose coefficient we range over.
      Rat coeff = tv.is_rational() ? tv.a : tv.b;
      if (!tv.is_rational() && tv.a != 0)
        throw std::logic_error("mixed vertical prism coordinate");
      if (first) {
        out[a] = {coeff, coeff};
        first = false;
      } else {
        out[a].first = std::min(out[a].first, coeff);
        out[a].second = std::max(out[a].second, coeff);
      }
    }
  }
  return out;
}

}  // namespace

std::vector<Scalar> candidate_z(const Form& f, const Scalar& q,
                                const Polytope& base) {
  Ring r = f.ring;
  Int n = norm_int(q);
  if (n <= 0) throw std::domain_error("candidate_z needs norm(q) >= 1");
  // |zeta|^2 is maximized at a vertex of the base polytope.
  Surd max_b(0);
  for (const auto& v : base.verts) {
    Surd s(0);
    for (const auto& x : v) s += x * x;
    if (s > max_b) max_b = s;
  }
  Int bound = 0;
  while (Surd(Rat(bound)) < Surd(Rat(n)) * max_b) ++bound;
  Scalar scale = q.conj() / Rat(n);
  std::vector<Scalar> out;
  for (const auto& w : elements_norm_up_to(r, bound)) {
    Scalar zeta = w * scale;
    HeisPoint hp(zeta);
    Vec aff = to_affine(f, hp);
    Vec zc(aff.begin(), aff.begin() + base.dim);
    if (!contains(base, zc)) continue;
    bool dup = false;
    for (const auto& seen : out)
      if (seen == zeta) {
        dup = true;
        break;
      }
    if (!dup) out.push_back(zeta);
  }
  std::sort(out.begin(), out.end(), [&](const Scalar& a, const Scalar& b) {
    return point_less(f, HeisPoint(a), HeisPoint(b));
  });
  return out;
}

namespace {

// Rational arithmetic progression {x : x = r (mod s)}, s > 0.
struct Progression {
  Rat r, s;
};

std::optional<Progression> intersect(const Progression& p1,
                                     const Progression& p2) {
  Int D = boost::multiprecision::lcm(
      boost::multiprecision::lcm(den(p1.r), den(p1.s)),
      boost::multiprecision::lcm(den(p2.r), den(p2.s)));
  Int R1 = num(p1.r * D), S1 = num(p1.s * D);
  Int R2 = num(p2.r * D), S2 = num(p2.s * D);
  Int g = boost::multiprecision::gcd(S1, S2);
  Int diff = R2 - R1;
  if (diff % g != 0) return std::nullopt;
  // R1 + k S1 = R2 (mod S2)
  Int s1g = S1 / g, s2g = S2 / g;
  Int dg = (diff / g) % s2g;
  // Modular inverse of s1g mod s2g by extended euclid.
  Int t0 = 0, t1 = 1, r0 = s2g, r1 = ((s1g % s2g) + s2g) % s2g;
  while (r1 != 0) {
    Int qq = r0 / r1;
    Int tmp = r0 - qq * r1;
    r0 = r1;
    r1 = tmp;
    tmp = t0 - qq * t1;
    t0 = t1;
    t1 = tmp;
  }
  if (r0 != 1) throw std::logic_error("progression inverse failed");
  Int inv = ((t0 % s2g) + s2g) % s2g;
  Int k0 = ((dg * inv) % s2g + s2g) % s2g;
  Rat r = Rat(R1 + k0 * S1, D);
  Rat s = Rat(boost::multiprecision::lcm(S1, S2), D);
  // Normalize the offset into [0, s).
  r -= Rat(rat_floor(r / s)) * s;
  return Progression{r, s};
}

}  // namespace

std::vector<std::array<Surd, 3>> candidate_t(const Form& f, const Scalar& q,
                                             const Scalar& zeta,
                                             const Polytope& prism) {
  Ring r = f.ring;
  std::vector<std::array<Surd, 3>> out;
  if (r.kind == RingKind::Integers) {
    // Lift (zeta, 1): no vertical coordinate, no extra condition.
    out.push_back({Surd(0), Surd(0), Surd(0)});
    return out;
  }
  auto bounds = vertical_bounds(f, prism);
  if (r.kind == RingKind::Quadratic) {
    // f(c) = alpha + c*beta with alpha = -|z|^2 q / 2, beta = root*q/2.
    Scalar alpha = q * (-zeta.norm() / 2);
    Scalar beta = Scalar::root(r) * q / Rat(2);
    std::optional<Progression> prog = Progression{Rat(0), Rat(1)};
    bool infeasible = false;
    for (int i = 0; i < 2 && !infeasible; ++i) {
      if (beta.c[i] == 0) {
        if (!is_integer(alpha.c[i])) infeasible = true;
        continue;
      }
      // c*beta_i + alpha_i integral: progression with step 1/|beta_i|.
      Rat b = beta.c[i];
      if (b < 0) b = -b;
      Rat step = Rat(1) / b;
      Rat offset = -alpha.c[i] / beta.c[i];
      offset -= Rat(rat_floor(offset / step)) * step;
      if (prog) prog = intersect(*prog, Progression{offset, step});
      if (!prog) infeasible = true;
    }
    if (infeasible || !prog) return out;
    const auto& [lo, hi] = bounds[0];
    Rat c = prog->r + Rat(rat_ceil((lo - prog->r) / prog->s)) * prog->s;
    for (; c <= hi; c += prog->s)
      out.push_back({Surd(Rat(0), c, r.d), Surd(0), Surd(0)});
    return out;
  }
  // Quaternionic: exact grid scan with step 1/(2n) per axis, done in scaled
  // integer arithmetic.
  Int n = norm_int(q);
  Scalar base_part = q * (-zeta.norm() / 2);
  std::array<Scalar, 3> lin;
  for (int axis = 0; axis < 3; ++axis) {
    Scalar unit(r);
    unit.c[axis + 1] = 1;
    lin[axis] = unit * q / Rat(2);
  }
  // Common denominator L: conditions become integer congruences mod L.
  Int L = 1;
  Int twoN = 2 * n;
  for (int j = 0; j < 4; ++j) {
    L = boost::multiprecision::lcm(L, den(base_part.c[j]));
    for (int axis = 0; axis < 3; ++axis)
      L = boost::multiprecision::lcm(
          L, den(lin[axis].c[j] / Rat(twoN)));
  }
  if (L % 2 != 0) L *= 2;  // keep the half-integer class expressible
  long Ll = (long)L;
  long Bj[4], Aij[3][4];
  for (int j = 0; j < 4; ++j) {
    Bj[j] = (long)num(base_part.c[j] * L);
    for (int axis = 0; axis < 3; ++axis)
      Aij[axis][j] = (long)num(lin[axis].c[j] / Rat(twoN) * L);
  }
  std::array<std::pair<long, long>, 3> t_range;
  for (int axis = 0; axis < 3; ++axis) {
    t_range[axis] = {(long)num(bounds[axis].first * twoN),
                     (long)num(bounds[axis].second * twoN)};
    if (!is_integer(bounds[axis].first * twoN) ||
        !is_integer(bounds[axis].second * twoN))
      throw std::logic_error("prism bounds off the 1/(2n) grid");
  }
  long half = Ll / 2;
  for (long T1 = t_range[0].first; T1 <= t_range[0].second; ++T1)
    for (long T2 = t_range[1].first; T2 <= t_range[1].second; ++T2)
      for (long T3 = t_range[2].first; T3 <= t_range[2].second; ++T3) {
        bool all_int = true, all_half = true;
        for (int j = 0; j < 4 && (all_int || all_half); ++j) {
          long v = Bj[j] + T1 * Aij[0][j] + T2 * Aij[1][j] + T3 * Aij[2][j];
          long m = ((v % Ll) + Ll) % Ll;
          if (m != 0) all_int = false;
          if (m != half) all_half = false;
        }
        if (all_int || all_half)
          out.push_back({Surd(Rat(T1, twoN)), Surd(Rat(T2, twoN)),
                         Surd(Rat(T3, twoN))});
      }
  return out;
}

std::vector<HeisPoint> rational_points_of_depth(const Form& f,
                                                const StabilizerData& stab,
                                                const Int& n) {
  Ring r = f.ring;
  std::vector<Scalar> qs;
  if (r.kind == RingKind::Quaternion) {
    // The coarse quaternionic domain is not invariant under the finite part;
    // enumerating over every q of norm n keeps the point list complete.
    qs = all_of_norm(r, n);
  } else {
    qs = enumerate_norm_reps(r, n);
  }
  std::vector<HeisPoint> out;
  auto push_unique = [&](const HeisPoint& p) {
    for (const auto& seen : out)
      if (seen == p) return;
    out.push_back(p);
  };
  for (const auto& q : qs) {
    for (const auto& zeta : candidate_z(f, q, stab.base)) {
      for (const auto& t : candidate_t(f, q, zeta, stab.prism)) {
        HeisPoint p(zeta, t);
        if (!stab.point_in_prism(p)) continue;
        if (depth(f, BoundaryPoint::at(p)) != n) continue;
        push_unique(p);
      }
    }
  }
  std::sort(out.begin(), out.end(),
            [&](const HeisPoint& a, const HeisPoint& b) {
              return point_less(f, a, b);
            });
  return out;
}

std::vector<Orbit> group_into_orbits(const StabilizerData& stab,
                                     const std::vector<HeisPoint>& points) {
  const Form& f = stab.form;
  size_t n = points.size();
  std::vector<int> comp(n, -1);
  int ncomp = 0;
  for (size_t i = 0; i < n; ++i) {
    if (comp[i] >= 0) continue;
    comp[i] = ncomp;
    for (size_t j = i + 1; j < n; ++j) {
      if (comp[j] >= 0) continue;
      if (stab.orbit_word(points[i], points[j])) comp[j] = ncomp;
    }
    ++ncomp;
  }
  std::vector<Orbit> orbits(ncomp);
  for (int c = 0; c < ncomp; ++c) {
    std::vector<HeisPoint> members;
    for (size_t i = 0; i < n; ++i)
      if (comp[i] == c) members.push_back(points[i]);
    // Canonical representative: the least member.
    HeisPoint rep = members[0];
    for (const auto& m : members)
      if (point_less(f, m, rep)) rep = m;
    orbits[c].rep = rep;
    for (const auto& m : members) {
      auto w = stab.orbit_word(rep, m);
      if (!w)
        throw std::logic_error("orbit witness lost during regrouping");
      orbits[c].members.push_back({m, *w});
    }
  }
  return orbits;
}

std::vector<HeisPoint> depth_points_bruteforce(const Form& f,
                                               const StabilizerData& stab,
                                               const Int& n) {
  Ring r = f.ring;
  std::vector<HeisPoint> out;
  auto push_unique = [&](const HeisPoint& p) {
    for (const auto& seen : out)
      if (seen == p) return;
    out.push_back(p);
  };
  std::vector<Scalar> qs = all_of_norm(r, n);
  // zeta over the 1/n denominator lattice restricted to the base.
  Surd max_b(0);
  for (const auto& v : stab.base.verts) {
    Surd s(0);
    for (const auto& x : v) s += x * x;
    if (s > max_b) max_b = s;
  }
  Int nn = n * n;
  Int bound = 0;
  while (Surd(Rat(bound)) < Surd(Rat(nn)) * max_b) ++bound;
  std::vector<Scalar> zs;
  for (const auto& w : elements_norm_up_to(r, bound)) {
    Scalar zeta = w / Rat(n);
    HeisPoint hp(zeta);
    Vec aff = to_affine(f, hp);
    Vec zc(aff.begin(), aff.begin() + stab.base.dim);
    if (contains(stab.base, zc)) zs.push_back(zeta);
  }
  if (r.kind == RingKind::Integers) {
    for (const auto& zeta : zs)
      for (const auto& q : qs)
        if ((zeta * q).is_integral()) {
          HeisPoint p(zeta);
          if (stab.point_in_prism(p) && depth(f, BoundaryPoint::at(p)) == n)
            push_unique(p);
        }
  } else if (r.kind == RingKind::Quadratic) {
    auto bounds = vertical_bounds(f, stab.prism);
    for (const auto& zeta : zs) {
      for (Int m = num(bounds[0].first * n); m <= num(bounds[0].second * n);
           ++m) {
        Rat c(m, n);
        HeisPoint p(zeta, Surd(Rat(0), c, r.d));
        bool ok = false;
        auto lift = standard_lift(f, p);
        for (const auto& q : qs) {
          bool integral = true;
          for (const auto& x : lift)
            if (!(x * q).is_integral()) {
              integral = false;
              break;
            }
          if (integral) {
            ok = true;
            break;
          }
        }
        if (!ok) continue;
        if (stab.point_in_prism(p) && depth(f, BoundaryPoint::at(p)) == n)
          push_unique(p);
      }
    }
  } else {
    auto bounds = vertical_bounds(f, stab.prism);
    Int twoN = 2 * n;
    for (const auto& zeta : zs) {
      // Keep only zeta that can pair with some q at all.
      std::vector<Scalar> usable;
      for (const auto& q : qs)
        if ((zeta * q).is_integral()) usable.push_back(q);
      if (usable.empty()) continue;
      for (Int m1 = num(bounds[0].first * twoN);
           m1 <= num(bounds[0].second * twoN); ++m1)
        for (Int m2 = num(bounds[1].first * twoN);
             m2 <= num(bounds[1].second * twoN); ++m2)
          for (Int m3 = num(bounds[2].first * twoN);
               m3 <= num(bounds[2].second * twoN); ++m3) {
            HeisPoint p(zeta, {Surd(Rat(m1, twoN)), Surd(Rat(m2, twoN)),
                               Surd(Rat(m3, twoN))});
            auto lift = standard_lift(f, p);
            bool ok = false;
            for (const auto& q : usable) {
              bool integral = true;
              for (const auto& x : lift)
                if (!(x * q).is_integral()) {
                  integral = false;
                  break;
                }
              if (integral) {
                ok = true;
                break;
              }
            }
            if (!ok) continue;
            if (stab.point_in_prism(p) && depth(f, BoundaryPoint::at(p)) == n)
              push_unique(p);
          }
    }
  }
  std::sort(out.begin(), out.end(),
            [&](const HeisPoint& a, const HeisPoint& b) {
              return point_less(f, a, b);
            });
  return out;
}

std::vector<Int> represented_depths(Ring r, const Int& bound) {
  std::vector<Int> out;
  for (Int n = 1; n <= bound; ++n)
    if (!all_of_norm(r, n).empty()) out.push_back(n);
  return out;
}

std::string point_sort_key(const Form& f, const HeisPoint& p) {
  std::string s;
  for (const auto& x : to_affine(f, p)) s += x.str() + ";";
  return s;
}

}  // namespace cusplat
