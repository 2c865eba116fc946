#include "cusplat/hermitian.hpp"

#include <cmath>

#include "doctest.h"

using namespace cusplat;

namespace {
const Ring O3{RingKind::Quadratic, 3};
const Ring O7{RingKind::Quadratic, 7};
const Ring O1{RingKind::Quadratic, 1};
const Ring H{RingKind::Quaternion, 0};

Form form_of(Ring r) { return Form{FormKind::HermitianJ, r, 3}; }

Scalar sc(const std::string& s, Ring r) { return parse_scalar(s, r); }

HeisPoint hp(Ring r, const std::string& z, const std::string& t) {
  return HeisPoint(sc(z, r), parse_surd(t, r.surd()));
}

struct Lcg {
  unsigned long long s = 0x9e3779b97f4a7c15ull;
  long next(long lo, long hi) {
    s ^= s << 13;
    s ^= s >> 7;
    s ^= s << 17;
    return lo + (long)(s % (unsigned long long)(hi - lo + 1));
  }
};

HeisPoint random_point(Ring r, Lcg& g) {
  Scalar z(r);
  int coords = r.kind == RingKind::Quaternion ? 4 : 2;
  for (int i = 0; i < coords; ++i) z.c[i] = Rat(g.next(-4, 4), g.next(1, 3));
  HeisPoint p(z);
  if (r.kind == RingKind::Quaternion) {
    for (int i = 0; i < 3; ++i) p.t[i] = Surd(Rat(g.next(-4, 4), g.next(1, 3)));
  } else {
    p.t[0] = r.d == 1 ? Surd(Rat(g.next(-4, 4), g.next(1, 3)))
                      : Surd(Rat(0), Rat(g.next(-4, 4), g.next(1, 3)), r.d);
  }
  return p;
}
}  // namespace

TEST_CASE("inner products in the Siegel model") {
  Form f = form_of(O7);
  auto e1 = lift_infinity(f);
  CHECK(f.pairing(e1, e1).is_zero());
  auto psi0 = standard_lift(f, hp(O7, "0", "0"));
  CHECK(f.pairing(psi0, e1) == Scalar::one(O7));
  // p_{7,1} lift [-1, 0, i sqrt7]: <P, e1> = i sqrt7.
  std::vector<Scalar> p71 = {sc("-1", O7), sc("0", O7), sc("w", O7)};
  CHECK(f.pairing(p71, e1) == sc("w", O7));
}

TEST_CASE("standard lift and its self-pairing") {
  Form f = form_of(O7);
  auto v = standard_lift(f, hp(O7, "0", "0"));
  CHECK(v[0].is_zero());
  CHECK(v[1].is_zero());
  CHECK(v[2] == Scalar::one(O7));
  // psi(1, sqrt7) = [tau - 1, 1, 1].
  auto w = standard_lift(f, hp(O7, "1", "1 s"));
  CHECK(w[0] == sc("t-1", O7));
  CHECK(w[1] == Scalar::one(O7));
  // <psi(z,v,u), psi(z,v,u)> = -u on random input.
  Lcg g;
  for (Ring r : {O1, O3, O7, H}) {
    Form fr = form_of(r);
    for (int it = 0; it < 20; ++it) {
      HeisPoint p = random_point(r, g);
      Rat u(g.next(0, 9), g.next(1, 4));
      auto lift = standard_lift(fr, p, u);
      Scalar self = fr.pairing(lift, lift);
      CHECK(self.is_rational());
      CHECK(self.c[0] == -u);
    }
  }
}

TEST_CASE("bergman distance examples") {
  Form f = form_of(O3);
  auto z = standard_lift(f, hp(O3, "0", "0"), Rat(1));
  auto w = standard_lift(f, hp(O3, "0", "0"), Rat(4));
  CHECK(bergman_cosh2(f, z, w) == Rat(25, 16));
  CHECK(bergman_cosh2(f, z, z) == Rat(1));
  // Scaling a lift does not change the value.
  std::vector<Scalar> w2;
  for (const auto& x : w) w2.push_back(x * Rat(2));
  CHECK(bergman_cosh2(f, z, w2) == Rat(25, 16));
  CHECK_THROWS(bergman_cosh2(f, standard_lift(f, hp(O3, "0", "0")), z));
}

TEST_CASE("primitive lifts and levels") {
  Form f = form_of(O3);
  // (0,0) lifts to [0,0,1].
  auto p0 = primitive_lift(f, BoundaryPoint::at(hp(O3, "0", "0")));
  CHECK(p0[0].is_zero());
  CHECK(p0[2].is_unit());
  // [0,0,2] reduces to [0,0,1] (up to the canonical unit).
  auto v = primitive_lift_vec(
      f, {sc("0", O3), sc("0", O3), sc("2", O3)});
  CHECK(v[2].is_unit());
  // Depth examples from the paper's point lists.
  CHECK(depth(f, BoundaryPoint::at(hp(O3, "0", "2/3 s"))) == 3);
  CHECK(depth(f, BoundaryPoint::at(hp(O3, "0", "0"))) == 1);
  CHECK(depth(f, BoundaryPoint::at(hp(O3, "0", "1 s"))) == 4);
  Form f1 = form_of(O1);
  CHECK(depth(f1, BoundaryPoint::at(hp(O1, "1", "1"))) == 2);
  CHECK(depth(f1, BoundaryPoint::at(hp(O1, "0", "1"))) == 4);
  Form f7 = form_of(O7);
  CHECK(depth(f7, BoundaryPoint::at(hp(O7, "t/2", "3/2 s"))) == 2);
  CHECK(depth(f7, BoundaryPoint::at(hp(O7, "1/2+t/2", "1 s"))) == 2);
  CHECK(depth(f7, BoundaryPoint::at(hp(O7, "1/4+t/4", "5/4 s"))) == 4);
  // level(p, p) = 0.
  CHECK(level(f7, BoundaryPoint::at(hp(O7, "1", "1 s")),
              BoundaryPoint::at(hp(O7, "1", "1 s"))) == 0);
  // Hurwitz depths from the lemma.
  Form fh = form_of(H);
  HeisPoint h2(Scalar::zero(H), {Surd(1), Surd(1), Surd(0)});
  CHECK(depth(fh, BoundaryPoint::at(h2)) == 2);
  HeisPoint h5(sc("2/5i+1/5j", H),
               {Surd(Rat(1, 5)), Surd(Rat(3, 5)), Surd(Rat(3, 5))});
  CHECK(depth(fh, BoundaryPoint::at(h5)) == 5);
}

TEST_CASE("heisenberg group law") {
  Form f = form_of(O7);
  // (0,v1)(0,v2) = (0, v1+v2).
  HeisPoint a = hp(O7, "0", "1 s"), b = hp(O7, "0", "2 s");
  CHECK(heis_mul(a, b) == hp(O7, "0", "3 s"));
  // (1,0)(tau,0) = (1+tau, -sqrt7).
  HeisPoint c = heis_mul(hp(O7, "1", "0"), hp(O7, "t", "0"));
  CHECK(c == hp(O7, "1+t", "-1 s"));
  // p p^-1 = identity on random points.
  Lcg g;
  for (Ring r : {O1, O3, O7, H}) {
    for (int it = 0; it < 20; ++it) {
      HeisPoint p = random_point(r, g);
      HeisPoint e = heis_mul(p, heis_inv(p));
      CHECK(e.zeta.is_zero());
      CHECK(e.t[0].is_zero());
      CHECK(e.t[1].is_zero());
      CHECK(e.t[2].is_zero());
    }
  }
  // Associativity on random triples.
  for (int it = 0; it < 20; ++it) {
    HeisPoint p = random_point(H, g), q = random_point(H, g),
              r = random_point(H, g);
    CHECK(heis_mul(heis_mul(p, q), r) == heis_mul(p, heis_mul(q, r)));
  }
}

TEST_CASE("translation matrices realize the group law") {
  Lcg g;
  for (Ring r : {O1, O3, O7, H}) {
    Form f = form_of(r);
    for (int it = 0; it < 15; ++it) {
      HeisPoint p = random_point(r, g), q = random_point(r, g);
      if (!p.is_E_rational() || !q.is_E_rational()) continue;
      Mat tp = translation_matrix(f, p), tq = translation_matrix(f, q);
      CHECK(tp * tq == translation_matrix(f, heis_mul(p, q)));
      CHECK(f.is_isometry(tp));
    }
  }
}

TEST_CASE("cygan metric examples and invariance") {
  Form f = form_of(O7);
  CHECK(cygan4(f, hp(O7, "0", "0"), hp(O7, "0", "2 s")) == Surd(Rat(28)));
  // The paper's spot values in the d=7 covering proof.
  Rat u("70711/100000");
  HeisPoint q1(sc("13/20t", O7), parse_surd("2.8", 7));
  Surd d1 = xcygan4(f, q1, u, hp(O7, "t/2", "3/2 s"), Rat(0));
  CHECK(std::abs(std::pow(d1.approx(), 0.25) - 1.179) < 1e-3);
  Surd d2 = xcygan4(f, q1, u, hp(O7, "1/2+t/2", "1 s"), Rat(0));
  CHECK(std::abs(std::pow(d2.approx(), 0.25) - 1.172) < 1e-3);
  Surd d3 = xcygan4(f, q1, u, hp(O7, "t", "1 s"), Rat(0));
  CHECK(std::abs(std::pow(d3.approx(), 0.25) - 0.982) < 1e-3);
  CHECK(in_ball(f, q1, u, CyganBall{hp(O7, "t", "1 s"), Rat(1), 4}));
  // Hurwitz spot value.
  Form fh = form_of(H);
  Rat uh("1633/2000");
  HeisPoint mid(parse_scalar("1/2j+1/2k", H), {Surd(1), Surd(1), Surd(Rat(1, 2))});
  HeisPoint ctr(Scalar::sigma(H), {Surd(1), Surd(1), Surd(1)});
  Surd dh = xcygan4(fh, mid, uh, ctr, Rat(0));
  CHECK(std::abs(std::pow(dh.approx(), 0.25) - 1.314) < 1e-3);
  HeisPoint org(Scalar::zero(H));
  Surd dh2 = xcygan4(fh, mid, uh, org, Rat(0));
  CHECK(std::abs(std::pow(dh2.approx(), 0.25) - 1.4127) < 2e-3);
  // Open balls exclude the boundary: distance^4 exactly 4 at height 2.
  CHECK(xcygan4(f, hp(O7, "0", "0"), Rat(2), hp(O7, "0", "0"), Rat(0)) ==
        Surd(Rat(4)));
  CHECK(!in_ball(f, hp(O7, "0", "0"), Rat(2),
                 CyganBall{hp(O7, "0", "0"), Rat(4), 1}));
  // Isometry invariance under translations, rotations, conjugations.
  Lcg g;
  for (Ring r : {O1, O3, O7, H}) {
    Form fr = form_of(r);
    for (int it = 0; it < 25; ++it) {
      HeisPoint p = random_point(r, g), q = random_point(r, g);
      HeisPoint t = random_point(r, g);
      Surd before = cygan4(fr, p, q);
      CHECK(cygan4(fr, heis_mul(t, p), heis_mul(t, q)) == before);
      if (r.kind == RingKind::Quaternion) {
        auto us = units(r);
        const Scalar& w = us[g.next(0, (long)us.size() - 1)];
        Mat c = conj_matrix(fr, w);
        auto act = [&](const HeisPoint& x) {
          return apply(fr, c, BoundaryPoint::at(x)).p;
        };
        CHECK(cygan4(fr, act(p), act(q)) == before);
        Mat rot = rotation_matrix(fr, w);
        auto actr = [&](const HeisPoint& x) {
          return apply(fr, rot, BoundaryPoint::at(x)).p;
        };
        CHECK(cygan4(fr, actr(p), actr(q)) == before);
      }
    }
  }
}

TEST_CASE("extended cygan distance equals twice the pairing modulus") {
  // d_XC^4 = 4 |<psi_1, psi_2>|^2 on random rational inputs.
  Lcg g;
  for (Ring r : {O1, O3, O7, H}) {
    Form f = form_of(r);
    for (int it = 0; it < 20; ++it) {
      HeisPoint p = random_point(r, g), q = random_point(r, g);
      if (!p.is_E_rational() || !q.is_E_rational()) continue;
      Rat up(g.next(0, 5), g.next(1, 3)), uq(g.next(0, 5), g.next(1, 3));
      Surd lhs = xcygan4(f, p, up, q, uq);
      Rat rhs = f.pairing(standard_lift(f, p, up), standard_lift(f, q, uq))
                    .norm() *
                4;
      CHECK(lhs == Surd(rhs));
    }
  }
}

TEST_CASE("conjugation action on vertical coordinates") {
  Form fh = form_of(H);
  // conj by i sends j to -j.
  HeisPoint vj(Scalar::zero(H), {Surd(0), Surd(2), Surd(0)});
  Mat ci = conj_matrix(fh, parse_scalar("i", H));
  HeisPoint img = apply(fh, ci, BoundaryPoint::at(vj)).p;
  CHECK(img.t[1] == Surd(-2));
  // conj by sigma sends i to j.
  HeisPoint vi(Scalar::zero(H), {Surd(2), Surd(0), Surd(0)});
  Mat cs = conj_matrix(fh, Scalar::sigma(H));
  HeisPoint img2 = apply(fh, cs, BoundaryPoint::at(vi)).p;
  CHECK(img2.t[1] == Surd(2));
  CHECK(img2.t[0] == Surd(0));
  // rotation_matrix(1) = Id.
  CHECK(rotation_matrix(fh, Scalar::one(H)).is_identity());
}
