#include "cusplat/hermitian.hpp"

#include <algorithm>

namespace cusplat {

std::vector<Scalar> standard_lift(const Form& f, const HeisPoint& p,
                                  const Rat& u) {
  Ring r = f.ring;
  if (f.kind == FormKind::Symplectic) {
    if (u != 0) throw std::logic_error("symplectic lift is boundary-only");
    return {p.zeta, Scalar::one(r)};
  }
  Scalar v = p.v_scalar();
  Scalar first = (v - Scalar(r, p.zeta.norm() + u)) / Rat(2);
  return {first, p.zeta, Scalar::one(r)};
}

std::vector<Scalar> lift_infinity(const Form& f) {
  std::vector<Scalar> e(f.n, Scalar::zero(f.ring));
  e[0] = Scalar::one(f.ring);
  return e;
}

std::vector<Scalar> lift_of(const Form& f, const BoundaryPoint& b) {
  return b.inf ? lift_infinity(f) : standard_lift(f, b.p);
}

BoundaryPoint from_lift(const Form& f, const std::vector<Scalar>& lift) {
  Ring r = f.ring;
  const Scalar& last = lift.back();
  if (last.is_zero()) {
    // Isotropic with vanishing last coordinate forces the middle to vanish.
    for (size_t i = 1; i + 1 < lift.size(); ++i)
      if (!lift[i].is_zero())
        throw std::domain_error("lift is not a boundary point");
    return BoundaryPoint::infinity(r);
  }
  Scalar inv = last.inverse();
  if (f.kind == FormKind::Symplectic)
    return BoundaryPoint::at(HeisPoint(lift[0] * inv));
  Scalar zeta = lift[1] * inv;
  Scalar first = lift[0] * inv;
  Scalar v = first * Rat(2) + Scalar(r, zeta.norm());
  if (!v.is_pure_imaginary())
    throw std::domain_error("lift is not isotropic (v not imaginary)");
  HeisPoint p(zeta);
  switch (r.kind) {
    case RingKind::Integers:
      break;
    case RingKind::Quadratic:
      p.t[0] = r.d == 1 ? Surd(v.c[1]) : Surd(Rat(0), v.im_coeff(), r.d);
      break;
    case RingKind::Quaternion:
      p.t = {Surd(v.c[1]), Surd(v.c[2]), Surd(v.c[3])};
      break;
  }
  return BoundaryPoint::at(p);
}

std::vector<Scalar> primitive_lift_vec(const Form& f,
                                       const std::vector<Scalar>& lift) {
  Ring r = f.ring;
  // Clear denominators (a central positive integer acts on the right).
  Int l = 1;
  for (const auto& x : lift)
    for (const auto& co : x.c) l = boost::multiprecision::lcm(l, den(co));
  std::vector<Scalar> v;
  v.reserve(lift.size());
  for (const auto& x : lift) v.push_back(x * Rat(l));
  // Divide out the content (a right divisor for quaternions).
  Scalar g = gcd_content(v);
  Scalar gi = g.inverse();
  for (auto& x : v) x = x * gi;
  for (const auto& x : v)
    if (!x.is_integral()) throw std::logic_error("content division failed");
  // Canonical unit: lexicographically least coefficient stream.
  std::vector<Scalar> best = v;
  auto key = [](const std::vector<Scalar>& w) {
    std::string s;
    for (const auto& x : w)
      for (const auto& co : x.c) s += fmt_rat(co) + "|";
    return s;
  };
  std::string best_key = key(v);
  for (const auto& u : units(r)) {
    std::vector<Scalar> cand;
    cand.reserve(v.size());
    for (const auto& x : v) cand.push_back(x * u);
    std::string k = key(cand);
    if (k < best_key) {
      best_key = k;
      best = cand;
    }
  }
  return best;
}

std::vector<Scalar> primitive_lift(const Form& f, const BoundaryPoint& b) {
  return primitive_lift_vec(f, lift_of(f, b));
}

Int level(const Form& f, const BoundaryPoint& p, const BoundaryPoint& q) {
  auto P = primitive_lift(f, p);
  auto Q = primitive_lift(f, q);
  Rat n = f.pairing(P, Q).norm();
  if (!is_integer(n)) throw std::logic_error("level is not an integer");
  return num(n);
}

Int depth(const Form& f, const BoundaryPoint& p) {
  return level(f, p, BoundaryPoint::infinity(f.ring));
}

BoundaryPoint apply(const Form& f, const Mat& A, const BoundaryPoint& p) {
  return from_lift(f, A * lift_of(f, p));
}

Rat bergman_cosh2(const Form& f, const std::vector<Scalar>& Z,
                  const std::vector<Scalar>& W) {
  Scalar zz = f.pairing(Z, Z), ww = f.pairing(W, W);
  if (!zz.is_rational() || !ww.is_rational())
    throw std::domain_error("self-pairing must be real");
  if (!(zz.c[0] < 0) || !(ww.c[0] < 0))
    throw std::domain_error("bergman_cosh2 needs negative vectors");
  Rat zw2 = f.pairing(Z, W).norm();
  return zw2 / (zz.c[0] * ww.c[0]);
}

}  // namespace cusplat
