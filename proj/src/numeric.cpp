#include "cusplat/numeric.hpp"

#include <cmath>
#include <cstdlib>

namespace cusplat {

Rat parse_rat(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    Int n(s.substr(0, slash));
    Int d(s.substr(slash + 1));
    if (d == 0) throw std::invalid_argument("zero denominator: " + s);
    return Rat(n, d);
  }
  auto dot = s.find('.');
  if (dot != std::string::npos) {
    std::string head = s.substr(0, dot), tail = s.substr(dot + 1);
    if (head.empty() || head == "-") head += "0";
    Int n(head);
    Int scale = 1;
    Int frac = 0;
    for (char c : tail) {
      if (c < '0' || c > '9') throw std::invalid_argument("bad decimal: " + s);
      frac = frac * 10 + (c - '0');
      scale *= 10;
    }
    bool neg = s[0] == '-';
    Rat r = Rat(n) + (neg ? -Rat(frac, scale) : Rat(frac, scale));
    return r;
  }
  return Rat(Int(s));
}

std::string fmt_rat(const Rat& r) {
  std::string s = num(r).str();
  if (den(r) != 1) s += "/" + den(r).str();
  return s;
}

Surd::Surd(Rat ra, Rat rb, int dd) : a(std::move(ra)), b(std::move(rb)), d(dd) {
  if (d == 1) {
    a += b;
    b = 0;
    d = 0;
  }
  if (b == 0) d = 0;
}

int surd_merge_tag(int d1, int d2) {
  if (d1 == 0) return d2;
  if (d2 == 0 || d1 == d2) return d1;
  throw std::logic_error("mixing incompatible surds");
}

int Surd::sign() const {
  int sa = a.sign(), sb = b.sign();
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: compare a^2 with d*b^2.
  Rat a2 = a * a, db2 = Rat(d) * b * b;
  if (a2 == db2) return 0;
  bool rational_part_wins = a2 > db2;
  return rational_part_wins ? sa : sb;
}

Surd& Surd::operator+=(const Surd& o) {
  d = surd_merge_tag(d, o.d);
  a += o.a;
  b += o.b;
  if (b == 0) d = 0;
  return *this;
}

Surd& Surd::operator-=(const Surd& o) {
  d = surd_merge_tag(d, o.d);
  a -= o.a;
  b -= o.b;
  if (b == 0) d = 0;
  return *this;
}

Surd& Surd::operator*=(const Surd& o) {
  int dd = surd_merge_tag(d, o.d);
  Rat na = a * o.a + Rat(dd) * b * o.b;
  Rat nb = a * o.b + b * o.a;
  a = na;
  b = nb;
  d = (nb == 0) ? 0 : dd;
  return *this;
}

Surd Surd::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero surd");
  Rat n = a * a - Rat(d) * b * b;
  if (n == 0) throw std::domain_error("non-invertible surd (degenerate tag)");
  return Surd(a / n, -b / n, d);
}

Surd& Surd::operator/=(const Surd& o) { return *this *= o.inverse(); }

Rat Surd::rational() const {
  if (b != 0) throw std::domain_error("surd is irrational: " + str());
  return a;
}

double Surd::approx() const {
  return static_cast<double>(a) + static_cast<double>(b) * std::sqrt(double(d));
}

std::string Surd::str() const {
  if (b == 0) return fmt_rat(a);
  std::string s;
  if (a != 0) s = fmt_rat(a);
  std::string bs = fmt_rat(b);
  if (!s.empty() && bs[0] != '-') s += "+";
  s += bs + "*s" + std::to_string(d);
  return s;
}

Surd parse_surd(const std::string& in, int d) {
  // Grammar: term (('+'|'-') term)*, term := rat | rat? 's' | rat '*' 's'.
  Rat a = 0, b = 0;
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < in.size() && in[i] == ' ') ++i;
  };
  skip_ws();
  if (i == in.size()) throw std::invalid_argument("empty surd literal");
  bool first = true;
  while (i < in.size()) {
    skip_ws();
    int sign = 1;
    if (in[i] == '+' || in[i] == '-') {
      sign = in[i] == '-' ? -1 : 1;
      ++i;
    } else if (!first) {
      throw std::invalid_argument("bad surd literal: " + in);
    }
    first = false;
    skip_ws();
    size_t start = i;
    while (i < in.size() && (isdigit(in[i]) || in[i] == '/' || in[i] == '.'))
      ++i;
    Rat coeff = (i > start) ? parse_rat(in.substr(start, i - start)) : Rat(1);
    skip_ws();
    bool has_surd = false;
    if (i < in.size() && (in[i] == '*' || in[i] == 's')) {
      if (in[i] == '*') {
        ++i;
        skip_ws();
      }
      if (i < in.size() && in[i] == 's') {
        has_surd = true;
        ++i;
        while (i < in.size() && isdigit(in[i])) ++i;  // optional explicit d
      } else {
        throw std::invalid_argument("bad surd literal: " + in);
      }
    }
    if (i == start && !has_surd)
      throw std::invalid_argument("bad surd literal: " + in);
    if (has_surd)
      b += sign * coeff;
    else
      a += sign * coeff;
    skip_ws();
  }
  return Surd(a, b, b == 0 ? 0 : d);
}

}  // namespace cusplat
