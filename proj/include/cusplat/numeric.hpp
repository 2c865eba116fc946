#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace cusplat {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rat& r) { return den(r) == 1; }

// Floor of a rational as an integer.
inline Int rat_floor(const Rat& r) {
  Int q = num(r) / den(r);
  if (num(r) < 0 && q * den(r) != num(r)) --q;
  return q;
}

inline Int rat_ceil(const Rat& r) { return -rat_floor(-r); }

// Nearest integer, ties toward +infinity.
inline Int rat_round(const Rat& r) { return rat_floor(r + Rat(1, 2)); }

// Parses "a", "-a/b" or a decimal like "0.65"; throws on malformed input.
Rat parse_rat(const std::string& s);

// Renders as "num" or "num/den".
std::string fmt_rat(const Rat& r);

// Exact element a + b*sqrt(d) of a real quadratic field. d = 0 marks a plain
// rational (b must be 0); d = 1 is folded into the rational part upfront.
struct Surd {
  Rat a;
  Rat b;
  int d = 0;

  Surd() = default;
  Surd(Rat ra) : a(std::move(ra)) {}
  Surd(long v) : a(v) {}
  Surd(int v) : a(v) {}
  Surd(Rat ra, Rat rb, int dd);

  bool is_rational() const { return b == 0; }
  bool is_zero() const { return a == 0 && b == 0; }

  // Sign of the real value, computed exactly.
  int sign() const;

  Surd operator-() const { return Surd(-a, -b, d); }
  Surd& operator+=(const Surd& o);
  Surd& operator-=(const Surd& o);
  Surd& operator*=(const Surd& o);
  Surd& operator/=(const Surd& o);

  friend Surd operator+(Surd x, const Surd& y) { return x += y; }
  friend Surd operator-(Surd x, const Surd& y) { return x -= y; }
  friend Surd operator*(Surd x, const Surd& y) { return x *= y; }
  friend Surd operator/(Surd x, const Surd& y) { return x /= y; }

  friend bool operator==(const Surd& x, const Surd& y) {
    return (x - y).is_zero();
  }
  friend bool operator!=(const Surd& x, const Surd& y) { return !(x == y); }
  friend bool operator<(const Surd& x, const Surd& y) {
    return (x - y).sign() < 0;
  }
  friend bool operator>(const Surd& y, const Surd& x) { return x < y; }
  friend bool operator<=(const Surd& x, const Surd& y) { return !(y < x); }
  friend bool operator>=(const Surd& x, const Surd& y) { return !(x < y); }

  Surd inverse() const;

  // Rational value; throws when the surd part is present.
  Rat rational() const;

  double approx() const;
  std::string str() const;  // "a" or "a+b*s<d>"
};

// Parses "a", "a+b*s" style strings where s stands for sqrt(d); also accepts
// the shorthand "b s" as b*sqrt(d). Used by the lattice data loader.
Surd parse_surd(const std::string& s, int d);

int surd_merge_tag(int d1, int d2);

}  // namespace cusplat
