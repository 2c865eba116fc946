#include "cusplat/scalar.hpp"

#include <set>

#include "doctest.h"

using namespace cusplat;

namespace {
const Ring O1{RingKind::Quadratic, 1};
const Ring O3{RingKind::Quadratic, 3};
const Ring O7{RingKind::Quadratic, 7};
const Ring H{RingKind::Quaternion, 0};
const Ring Z{RingKind::Integers, 0};

Scalar sc(const std::string& s, Ring r) { return parse_scalar(s, r); }

// Deterministic little congruential generator for property sampling.
struct Lcg {
  unsigned long long s = 88172645463325252ull;
  long next(long lo, long hi) {
    s ^= s << 13;
    s ^= s >> 7;
    s ^= s << 17;
    return lo + (long)(s % (unsigned long long)(hi - lo + 1));
  }
};

Scalar random_elem(Ring r, Lcg& g) {
  Scalar x(r);
  int coords = r.kind == RingKind::Quaternion ? 4
               : r.kind == RingKind::Quadratic ? 2
                                               : 1;
  for (int i = 0; i < coords; ++i) x.c[i] = Rat(g.next(-6, 6));
  if (r.kind == RingKind::Quaternion && g.next(0, 1)) {
    for (int i = 0; i < 4; ++i) x.c[i] += Rat(1, 2);
  }
  return x;
}
}  // namespace

TEST_CASE("norms of distinguished elements") {
  CHECK(Scalar::tau(O7).norm() == 2);  // |tau|^2 = 2 for d = 7
  CHECK(Scalar::zero(O7).norm() == 0);
  CHECK(Scalar::sigma(H).norm() == 1);
  CHECK(Scalar::tau(O3).norm() == 1);
  CHECK(Scalar::tau(O1).norm() == 2);  // tau = 1 + i
  CHECK(Scalar::root(O7).norm() == 7);
}

TEST_CASE("norm is multiplicative; conjugation is an anti-map") {
  Lcg g;
  for (Ring r : {O1, O3, O7, H, Z}) {
    for (int it = 0; it < 50; ++it) {
      Scalar x = random_elem(r, g), y = random_elem(r, g);
      CHECK((x * y).norm() == x.norm() * y.norm());
      CHECK((x * y).conj() == y.conj() * x.conj());
      CHECK(x.conj().conj() == x);
      CHECK((x * x.conj()).is_rational());
    }
  }
}

TEST_CASE("unit groups have the right sizes and norms") {
  CHECK(units(O1).size() == 4);
  CHECK(units(O3).size() == 6);
  CHECK(units(O7).size() == 2);
  CHECK(units(H).size() == 24);
  CHECK(units(Z).size() == 2);
  for (Ring r : {O1, O3, O7, H, Z})
    for (const auto& u : units(r)) {
      CHECK(u.is_unit());
      CHECK(u.norm() == 1);
    }
  // Exhaustive box check: unit <=> integral of norm 1.
  for (Ring r : {O1, O3, O7}) {
    int found = 0;
    for (long x = -3; x <= 3; ++x)
      for (long y = -3; y <= 3; ++y) {
        Scalar s(r, {Rat(x), Rat(y), Rat(0), Rat(0)});
        if (s.is_unit()) ++found;
      }
    CHECK(found == (int)units(r).size());
  }
}

TEST_CASE("norm representative enumeration") {
  // d = 7, n = 2: exactly tau and tau - 1 up to units.
  auto reps = enumerate_norm_reps(O7, 2);
  REQUIRE(reps.size() == 2);
  Scalar tau = Scalar::tau(O7);
  Scalar tau1 = tau - Scalar::one(O7);
  auto equiv = [&](const Scalar& a, const Scalar& b) {
    for (const auto& u : units(O7))
      if (a * u == b) return true;
    return false;
  };
  CHECK((equiv(reps[0], tau) || equiv(reps[1], tau)));
  CHECK((equiv(reps[0], tau1) || equiv(reps[1], tau1)));

  CHECK(enumerate_norm_reps(O7, 5).empty());
  CHECK(enumerate_norm_reps(O7, 3).empty());

  // Hurwitz: one class of norm 2, represented by 1 + i up to two-sided units.
  auto h2 = enumerate_norm_reps(H, 2);
  REQUIRE(h2.size() == 1);
  CHECK(h2[0].norm() == 2);
  CHECK(all_of_norm(H, 2).size() == 24);
  // Norm 5 likewise a single class (144 elements).
  auto h5 = enumerate_norm_reps(H, 5);
  CHECK(h5.size() == 1);
  CHECK(all_of_norm(H, 5).size() == 144);
  // Norm 1 counts the units themselves.
  CHECK(all_of_norm(H, 1).size() == 24);
}

TEST_CASE("every enumerated element has the requested norm, no two equivalent") {
  for (Ring r : {O1, O3, O7}) {
    for (long n = 1; n <= 8; ++n) {
      auto reps = enumerate_norm_reps(r, n);
      for (const auto& q : reps) CHECK(q.norm() == n);
      for (size_t i = 0; i < reps.size(); ++i)
        for (size_t j = i + 1; j < reps.size(); ++j)
          for (const auto& u : units(r)) CHECK(!(reps[i] * u == reps[j]));
      // Brute-force completeness: every solution is a unit multiple of a rep.
      for (const auto& s : all_of_norm(r, n)) {
        bool matched = false;
        for (const auto& q : reps)
          for (const auto& u : units(r))
            if (q * u == s) matched = true;
        CHECK(matched);
      }
    }
  }
}

TEST_CASE("primitivity") {
  Scalar m2 = sc("-2", O3), zero = sc("0", O3), root = sc("w", O3);
  CHECK(is_primitive({m2, zero, root}));                // [-2, 0, i sqrt3]
  CHECK(!is_primitive({sc("0", O3), zero, sc("2", O3)}));
  CHECK(is_primitive({zero, zero, sc("1", O3)}));
  CHECK_THROWS(is_primitive(std::vector<Scalar>{zero, zero, zero}));
  // Hurwitz: common right divisor 1+i.
  Scalar opi = sc("1+i", H);
  CHECK(!is_primitive({sc("j", H) * opi, sc("2", H) * opi, opi}));
  // 1+i left-divides but sigma does not right-divide [2, 1+i].
  CHECK(is_primitive({sc("1+i", H), sc("j+k", H), sc("1", H)}));
}

TEST_CASE("gcd content is a common divisor with unit cofactor gcd") {
  Lcg g;
  for (Ring r : {O1, O3, O7, Z}) {
    for (int it = 0; it < 30; ++it) {
      Scalar a = random_elem(r, g), b = random_elem(r, g);
      for (auto& c : a.c) c = Rat(num(c));  // force integral
      for (auto& c : b.c) c = Rat(num(c));
      if (a.is_zero() && b.is_zero()) continue;
      Scalar d = gcd_content({a, b});
      Scalar di = d.inverse();
      CHECK((a * di).is_integral());
      CHECK((b * di).is_integral());
    }
  }
  // Quaternions: gcrd divides on the right.
  Lcg g2;
  for (int it = 0; it < 30; ++it) {
    Scalar a = random_elem(H, g2), b = random_elem(H, g2);
    Scalar two(H, Rat(2));
    a = a * two;
    b = b * two;
    for (auto& c : a.c) c = Rat(num(c));
    for (auto& c : b.c) c = Rat(num(c));
    if (a.is_zero() && b.is_zero()) continue;
    Scalar d = gcd_content({a, b});
    Scalar di = d.inverse();
    CHECK((a * di).is_integral());
    CHECK((b * di).is_integral());
  }
}

TEST_CASE("scalar parser round trips the paper's entries") {
  CHECK(sc("-t-2", O7) == Scalar(O7, {Rat(-2), Rat(-1), Rat(0), Rat(0)}));
  CHECK(sc("w", O7) == Scalar(O7, {Rat(-1), Rat(2), Rat(0), Rat(0)}));
  CHECK(sc("2t-4", O7) == Scalar(O7, {Rat(-4), Rat(2), Rat(0), Rat(0)}));
  CHECK(sc("s-2+i-j", H) ==
        Scalar(H, {Rat(-3, 2), Rat(3, 2), Rat(-1, 2), Rat(1, 2)}));
  CHECK(sc("b", H) == Scalar::sigma(H).conj());
  CHECK(sc("1/2", O1) == Scalar(O1, Rat(1, 2)));
  CHECK(sc("t", O1) == Scalar(O1, {Rat(1), Rat(1), Rat(0), Rat(0)}));
  CHECK_THROWS(sc("i", O7));
  // tau^2 = tau - 2 for d = 7.
  Scalar t = Scalar::tau(O7);
  CHECK(t * t == sc("t-2", O7));
  // sigma^2 = sigma - 1.
  Scalar s = Scalar::sigma(H);
  CHECK(s * s == s - Scalar::one(H));
}
