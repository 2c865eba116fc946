#include "cusplat/scalar.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <map>
#include <set>

namespace cusplat {

std::string Ring::name() const {
  switch (kind) {
    case RingKind::Integers:
      return "Z";
    case RingKind::Quadratic:
      return "O" + std::to_string(d);
    case RingKind::Quaternion:
      return "H";
  }
  return "?";
}

Scalar Scalar::omega(Ring r) {
  Scalar x(r);
  if (r.kind == RingKind::Integers)
    throw std::logic_error("omega undefined over Z");
  x.c[1] = 1;
  return x;
}

Scalar Scalar::tau(Ring r) {
  if (r.kind != RingKind::Quadratic) throw std::logic_error("tau needs O_d");
  Scalar x(r);
  if (r.d == 1) {
    x.c[0] = 1;  // tau = 1 + i, the paper's d = 1 convention
    x.c[1] = 1;
  } else {
    x.c[1] = 1;
  }
  return x;
}

Scalar Scalar::root(Ring r) {
  if (r.kind != RingKind::Quadratic) throw std::logic_error("root needs O_d");
  Scalar x(r);
  if (r.d == 1) {
    x.c[1] = 1;
  } else {
    x.c[0] = -1;  // i*sqrt(d) = 2*tau - 1
    x.c[1] = 2;
  }
  return x;
}

Scalar Scalar::sigma(Ring r) {
  if (r.kind != RingKind::Quaternion)
    throw std::logic_error("sigma needs the Hurwitz order");
  Scalar x(r);
  x.c = {Rat(1, 2), Rat(1, 2), Rat(1, 2), Rat(1, 2)};
  return x;
}

bool Scalar::is_zero() const {
  return c[0] == 0 && c[1] == 0 && c[2] == 0 && c[3] == 0;
}

bool Scalar::is_integral() const {
  switch (ring.kind) {
    case RingKind::Integers:
      return is_integer(c[0]) && c[1] == 0 && c[2] == 0 && c[3] == 0;
    case RingKind::Quadratic:
      return is_integer(c[0]) && is_integer(c[1]) && c[2] == 0 && c[3] == 0;
    case RingKind::Quaternion: {
      bool all_int = true, all_half = true;
      for (const auto& x : c) {
        if (!is_integer(x)) all_int = false;
        if (!is_integer(x + Rat(1, 2))) all_half = false;
      }
      return all_int || all_half;
    }
  }
  return false;
}

bool Scalar::is_rational() const { return c[1] == 0 && c[2] == 0 && c[3] == 0; }

bool Scalar::is_unit() const { return is_integral() && norm() == 1; }

bool Scalar::is_pure_imaginary() const { return re() == 0; }

Rat Scalar::re() const {
  if (ring.kind == RingKind::Quadratic && ring.d != 1)
    return c[0] + c[1] / 2;
  return c[0];
}

Rat Scalar::im_coeff() const {
  if (ring.kind != RingKind::Quadratic)
    throw std::logic_error("im_coeff needs O_d");
  return ring.d == 1 ? c[1] : c[1] / 2;
}

Rat Scalar::norm() const {
  switch (ring.kind) {
    case RingKind::Integers:
      return c[0] * c[0];
    case RingKind::Quadratic: {
      if (ring.d == 1) return c[0] * c[0] + c[1] * c[1];
      return c[0] * c[0] + c[0] * c[1] + c[1] * c[1] * Rat(1 + ring.d, 4);
    }
    case RingKind::Quaternion:
      return c[0] * c[0] + c[1] * c[1] + c[2] * c[2] + c[3] * c[3];
  }
  return Rat(0);
}

Scalar Scalar::conj() const {
  Scalar x(*this);
  switch (ring.kind) {
    case RingKind::Integers:
      break;
    case RingKind::Quadratic:
      if (ring.d == 1) {
        x.c[1] = -c[1];
      } else {
        x.c[0] = c[0] + c[1];  // conj(tau) = 1 - tau
        x.c[1] = -c[1];
      }
      break;
    case RingKind::Quaternion:
      x.c[1] = -c[1];
      x.c[2] = -c[2];
      x.c[3] = -c[3];
      break;
  }
  return x;
}

Scalar Scalar::inverse() const {
  Rat n = norm();
  if (n == 0) throw std::domain_error("inverse of zero");
  return conj() / n;
}

Scalar Scalar::operator-() const {
  Scalar x(*this);
  for (auto& v : x.c) v = -v;
  return x;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (!(ring == o.ring)) throw std::logic_error("ring mismatch in +");
  for (int i = 0; i < 4; ++i) c[i] += o.c[i];
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  if (!(ring == o.ring)) throw std::logic_error("ring mismatch in -");
  for (int i = 0; i < 4; ++i) c[i] -= o.c[i];
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (!(ring == o.ring)) throw std::logic_error("ring mismatch in *");
  switch (ring.kind) {
    case RingKind::Integers:
      c[0] *= o.c[0];
      break;
    case RingKind::Quadratic: {
      Rat x0 = c[0], x1 = c[1];
      if (ring.d == 1) {
        c[0] = x0 * o.c[0] - x1 * o.c[1];
        c[1] = x0 * o.c[1] + x1 * o.c[0];
      } else {
        // tau^2 = tau - (1+d)/4
        Rat t2 = Rat(1 + ring.d, 4);
        c[0] = x0 * o.c[0] - x1 * o.c[1] * t2;
        c[1] = x0 * o.c[1] + x1 * o.c[0] + x1 * o.c[1];
      }
      break;
    }
    case RingKind::Quaternion: {
      Rat a0 = c[0], a1 = c[1], a2 = c[2], a3 = c[3];
      const Rat &b0 = o.c[0], &b1 = o.c[1], &b2 = o.c[2], &b3 = o.c[3];
      c[0] = a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3;
      c[1] = a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2;
      c[2] = a0 * b2 + a2 * b0 + a3 * b1 - a1 * b3;
      c[3] = a0 * b3 + a3 * b0 + a1 * b2 - a2 * b1;
      break;
    }
  }
  return *this;
}

Scalar Scalar::operator*(const Rat& r) const {
  Scalar x(*this);
  for (auto& v : x.c) v *= r;
  return x;
}

Scalar Scalar::operator/(const Rat& r) const {
  if (r == 0) throw std::domain_error("division by zero");
  Scalar x(*this);
  for (auto& v : x.c) v /= r;
  return x;
}

std::strong_ordering lex_order(const Scalar& x, const Scalar& y) {
  for (int i = 0; i < 4; ++i) {
    if (x.c[i] < y.c[i]) return std::strong_ordering::less;
    if (x.c[i] > y.c[i]) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

double Scalar::approx_re() const {
  double v = static_cast<double>(c[0]);
  if (ring.kind == RingKind::Quadratic && ring.d != 1)
    v += static_cast<double>(c[1]) / 2;
  return v;
}

double Scalar::approx_im() const {
  if (ring.kind != RingKind::Quadratic) return 0.0;
  if (ring.d == 1) return static_cast<double>(c[1]);
  return static_cast<double>(c[1]) * std::sqrt(double(ring.d)) / 2;
}

std::string Scalar::str() const {
  auto term = [](const Rat& v, const std::string& sym, bool& first) {
    std::string s;
    if (v == 0) return s;
    std::string mag = fmt_rat(v < 0 ? Rat(-v) : v);
    s += (v < 0) ? "-" : (first ? "" : "+");
    if (sym.empty() || mag != "1") s += mag;
    if (!sym.empty() && mag != "1") s += "*";
    s += sym;
    first = false;
    return s;
  };
  std::string out;
  bool first = true;
  out += term(c[0], "", first);
  switch (ring.kind) {
    case RingKind::Integers:
      break;
    case RingKind::Quadratic:
      out += term(c[1], ring.d == 1 ? "i" : "t", first);
      break;
    case RingKind::Quaternion:
      out += term(c[1], "i", first);
      out += term(c[2], "j", first);
      out += term(c[3], "k", first);
      break;
  }
  if (out.empty()) out = "0";
  return out;
}

std::vector<Scalar> units(Ring r) {
  std::vector<Scalar> us;
  Scalar one = Scalar::one(r);
  switch (r.kind) {
    case RingKind::Integers:
      us = {one, -one};
      break;
    case RingKind::Quadratic: {
      us = {one, -one};
      if (r.d == 1) {
        Scalar i = Scalar::omega(r);
        us.push_back(i);
        us.push_back(-i);
      } else if (r.d == 3) {
        Scalar t = Scalar::tau(r);
        Scalar tm1 = t - one;
        us.insert(us.end(), {t, -t, tm1, -tm1});
      }
      break;
    }
    case RingKind::Quaternion: {
      for (int axis = 0; axis < 4; ++axis)
        for (int sgn : {1, -1}) {
          Scalar u(r);
          u.c[axis] = sgn;
          us.push_back(u);
        }
      for (int s0 : {1, -1})
        for (int s1 : {1, -1})
          for (int s2 : {1, -1})
            for (int s3 : {1, -1}) {
              Scalar u(r);
              u.c = {Rat(s0, 2), Rat(s1, 2), Rat(s2, 2), Rat(s3, 2)};
              us.push_back(u);
            }
      break;
    }
  }
  return us;
}

std::vector<Scalar> all_of_norm(Ring r, const Int& n) {
  std::vector<Scalar> out;
  if (n < 0) return out;
  switch (r.kind) {
    case RingKind::Integers: {
      Int x = boost::multiprecision::sqrt(n);
      if (x * x == n) {
        out.emplace_back(r, Rat(x));
        if (x != 0) out.emplace_back(r, Rat(-x));
      }
      break;
    }
    case RingKind::Quadratic: {
      // norm(x + y*omega) with |y| bounded by the definite part.
      long ymax;
      if (r.d == 1)
        ymax = (long)std::floor(std::sqrt(double(n)) + 1);
      else
        ymax = (long)std::floor(std::sqrt(4.0 * double(n) / r.d) + 1);
      for (long y = -ymax; y <= ymax; ++y)
        for (long x = -(long)std::floor(std::sqrt(double(n)) + double(ymax) + 2);
             x <= (long)std::floor(std::sqrt(double(n)) + double(ymax) + 2); ++x) {
          Scalar s(r, {Rat(x), Rat(y), Rat(0), Rat(0)});
          if (s.norm() == Rat(n)) out.push_back(s);
        }
      break;
    }
    case RingKind::Quaternion: {
      // Integer coordinates, then all-odd halves (x/2 with x odd).
      long m = (long)std::floor(std::sqrt(double(n)) + 1);
      for (long a = -m; a <= m; ++a)
        for (long b = -m; b <= m; ++b)
          for (long cc = -m; cc <= m; ++cc)
            for (long d0 = -m; d0 <= m; ++d0) {
              Scalar s(r, {Rat(a), Rat(b), Rat(cc), Rat(d0)});
              if (s.norm() == Rat(n)) out.push_back(s);
            }
      long m2 = 2 * m + 1;
      for (long a = -m2; a <= m2; a += 2)
        for (long b = -m2; b <= m2; b += 2)
          for (long cc = -m2; cc <= m2; cc += 2)
            for (long d0 = -m2; d0 <= m2; d0 += 2) {
              Scalar s(r, {Rat(a, 2), Rat(b, 2), Rat(cc, 2), Rat(d0, 2)});
              if (s.norm() == Rat(n)) out.push_back(s);
            }
      break;
    }
  }
  return out;
}

namespace {

std::array<Rat, 4> key_of(const Scalar& s) {
  if (s.ring.kind == RingKind::Quadratic)
    return {s.c[1], s.c[0], Rat(0), Rat(0)};  // prefer large omega part
  return s.c;
}

bool key_less(const Scalar& a, const Scalar& b) { return key_of(a) < key_of(b); }

Scalar canonical_in_orbit(std::vector<Scalar> orbit) {
  return *std::max_element(orbit.begin(), orbit.end(), key_less);
}

}  // namespace

std::vector<Scalar> enumerate_norm_reps(Ring r, const Int& n) {
  std::vector<Scalar> all = all_of_norm(r, n);
  std::vector<Scalar> us = units(r);
  std::vector<Scalar> reps;
  std::vector<bool> used(all.size(), false);
  auto find_idx = [&](const Scalar& s) -> long {
    for (size_t i = 0; i < all.size(); ++i)
      if (all[i] == s) return (long)i;
    return -1;
  };
  for (size_t i = 0; i < all.size(); ++i) {
    if (used[i]) continue;
    // Orbit closure under the declared equivalence.
    std::vector<Scalar> orbit{all[i]};
    used[i] = true;
    for (size_t head = 0; head < orbit.size(); ++head) {
      Scalar cur = orbit[head];
      std::vector<Scalar> nbrs;
      for (const auto& u : us) {
        nbrs.push_back(cur * u);
        if (r.kind == RingKind::Quaternion) {
          nbrs.push_back(u * cur);
          nbrs.push_back(u * cur * u.inverse());
        }
      }
      for (const auto& nb : nbrs) {
        long j = find_idx(nb);
        if (j >= 0 && !used[j]) {
          used[j] = true;
          orbit.push_back(all[j]);
        }
      }
    }
    reps.push_back(canonical_in_orbit(orbit));
  }
  std::sort(reps.begin(), reps.end(), key_less);
  return reps;
}

namespace {

// Division step candidates around the exact quotient.
std::vector<Scalar> quotient_candidates(const Scalar& q) {
  std::vector<Scalar> cands;
  Ring r = q.ring;
  if (r.kind == RingKind::Quaternion) {
    std::array<Int, 4> base;
    for (int i = 0; i < 4; ++i) base[i] = rat_floor(q.c[i]);
    for (int m = 0; m < 16; ++m) {
      Scalar cand(r);
      for (int i = 0; i < 4; ++i) cand.c[i] = Rat(base[i] + ((m >> i) & 1));
      cands.push_back(cand);
    }
    std::array<Int, 4> hbase;
    for (int i = 0; i < 4; ++i) hbase[i] = rat_floor(q.c[i] - Rat(1, 2));
    for (int m = 0; m < 16; ++m) {
      Scalar cand(r);
      for (int i = 0; i < 4; ++i)
        cand.c[i] = Rat(hbase[i] + ((m >> i) & 1)) + Rat(1, 2);
      cands.push_back(cand);
    }
  } else {
    std::array<Int, 2> base = {rat_floor(q.c[0]), rat_floor(q.c[1])};
    for (int dx = -1; dx <= 2; ++dx)
      for (int dy = -1; dy <= 2; ++dy) {
        Scalar cand(r);
        cand.c[0] = Rat(base[0] + dx);
        cand.c[1] = Rat(base[1] + dy);
        cands.push_back(cand);
      }
  }
  return cands;
}

// One Euclidean gcd / gcrd step pair. Commutative rings use plain gcd; the
// Hurwitz order computes the greatest common right divisor.
Scalar euclid_gcd(Scalar a, Scalar b) {
  while (!b.is_zero()) {
    Scalar q = a * b.inverse();  // a * b^-1; remainder a - cand*b
    Scalar best(a.ring);
    bool have = false;
    Rat best_norm;
    for (const auto& cand : quotient_candidates(q)) {
      Scalar rem = a - cand * b;
      Rat n = rem.norm();
      if (!have || n < best_norm) {
        have = true;
        best_norm = n;
        best = rem;
      }
    }
    if (best_norm >= b.norm())
      throw std::logic_error("euclidean step failed to reduce norm");
    a = b;
    b = best;
  }
  return a;
}

}  // namespace

Scalar gcd_content(const std::vector<Scalar>& xs) {
  Scalar g;
  bool have = false;
  for (const auto& x : xs) {
    if (x.is_zero()) continue;
    if (!x.is_integral()) throw std::logic_error("gcd of non-integral input");
    if (!have) {
      g = x;
      have = true;
    } else {
      g = euclid_gcd(g, x);
    }
  }
  if (!have) throw std::domain_error("gcd of all-zero vector");
  return g;
}

bool is_primitive(const std::vector<Scalar>& v) {
  bool all_zero = true;
  for (const auto& x : v) {
    if (!x.is_integral()) return false;
    if (!x.is_zero()) all_zero = false;
  }
  if (all_zero) throw std::domain_error("primitivity of the zero vector");
  return gcd_content(v).is_unit();
}

Scalar parse_scalar(const std::string& in, Ring r) {
  Scalar out(r);
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < in.size() && in[i] == ' ') ++i;
  };
  bool first = true;
  skip_ws();
  if (i == in.size()) throw std::invalid_argument("empty scalar literal");
  while (i < in.size()) {
    skip_ws();
    int sign = 1;
    if (in[i] == '+' || in[i] == '-') {
      sign = in[i] == '-' ? -1 : 1;
      ++i;
      skip_ws();
    } else if (!first) {
      throw std::invalid_argument("bad scalar literal: " + in);
    }
    first = false;
    size_t start = i;
    while (i < in.size() && (isdigit(in[i]) || in[i] == '/' || in[i] == '.'))
      ++i;
    bool has_coeff = i > start;
    Rat coeff = has_coeff ? parse_rat(in.substr(start, i - start)) : Rat(1);
    if (i < in.size() && in[i] == '*') ++i;
    Scalar sym(r);
    bool has_sym = false;
    if (i < in.size() && strchr("twijksb", in[i])) {
      has_sym = true;
      char ch = in[i++];
      switch (ch) {
        case 't':
          sym = Scalar::tau(r);
          break;
        case 'w':
          sym = Scalar::root(r);
          break;
        case 'i':
          if (r.kind == RingKind::Quadratic && r.d != 1)
            throw std::invalid_argument("bare i is not in O_" +
                                        std::to_string(r.d));
          sym = Scalar::omega(r);
          break;
        case 'j':
          if (r.kind != RingKind::Quaternion) throw std::invalid_argument("j needs H");
          sym.c[2] = 1;
          break;
        case 'k':
          if (r.kind != RingKind::Quaternion) throw std::invalid_argument("k needs H");
          sym.c[3] = 1;
          break;
        case 's':
          sym = Scalar::sigma(r);
          break;
        case 'b':
          sym = Scalar::sigma(r).conj();
          break;
      }
    }
    if (!has_coeff && !has_sym)
      throw std::invalid_argument("bad scalar literal: " + in);
    if (has_sym && i < in.size() && in[i] == '/') {
      // trailing denominator: t/2, w/3
      ++i;
      size_t dstart = i;
      while (i < in.size() && isdigit(in[i])) ++i;
      if (i == dstart) throw std::invalid_argument("bad scalar literal: " + in);
      coeff /= parse_rat(in.substr(dstart, i - dstart));
    }
    Scalar term = has_sym ? sym * coeff : Scalar(r, coeff);
    if (sign < 0) term = -term;
    out += term;
    skip_ws();
  }
  return out;
}

}  // namespace cusplat
