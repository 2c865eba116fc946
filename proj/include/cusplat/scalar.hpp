#pragma once

#include <array>
#include <vector>

#include "cusplat/numeric.hpp"

namespace cusplat {

enum class RingKind { Integers, Quadratic, Quaternion };

// Ring of integers the lattice entries live in: plain Z, O_d = Z[omega]
// (omega = i for d = 1, omega = (1+i*sqrt(d))/2 for d = 3, 7), or the
// Hurwitz order Z[i,j,k,(1+i+j+k)/2].
struct Ring {
  RingKind kind = RingKind::Integers;
  int d = 0;

  bool operator==(const Ring&) const = default;
  std::string name() const;
  int surd() const { return kind == RingKind::Quadratic ? d : 0; }
};

// Exact element of the fraction field: rational coefficients over the ring
// basis. Quadratic elements are c0 + c1*omega; quaternions c0 + c1 i + c2 j +
// c3 k; plain rationals use c0.
class Scalar {
 public:
  Ring ring;
  std::array<Rat, 4> c{Rat(0), Rat(0), Rat(0), Rat(0)};

  Scalar() = default;
  explicit Scalar(Ring r) : ring(r) {}
  Scalar(Ring r, Rat c0) : ring(r) { c[0] = std::move(c0); }
  Scalar(Ring r, std::array<Rat, 4> cc) : ring(r), c(std::move(cc)) {}

  static Scalar zero(Ring r) { return Scalar(r); }
  static Scalar one(Ring r) { return Scalar(r, Rat(1)); }
  // omega for quadratic rings, i for quaternions.
  static Scalar omega(Ring r);
  // tau as used by the paper: (1+i*sqrt(d))/2 for d = 3, 7 and 1+i for d = 1.
  static Scalar tau(Ring r);
  // i*sqrt(d) for quadratic rings (i itself when d = 1).
  static Scalar root(Ring r);
  static Scalar sigma(Ring r);  // (1+i+j+k)/2, quaternion only

  bool is_zero() const;
  bool is_integral() const;
  bool is_rational() const;
  bool is_unit() const;
  // Purely imaginary: zero real part (quadratic: Re = c0 [+ c1/2]).
  bool is_pure_imaginary() const;

  Rat re() const;
  // Coefficient s in Im(x) = s*sqrt(d) for quadratic (for d = 1 the plain
  // imaginary part). Meaningless for quaternions.
  Rat im_coeff() const;

  Rat norm() const;  // x * conj(x), exact non-negative rational
  Scalar conj() const;
  Scalar inverse() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);

  friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
  friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
  friend Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
  friend bool operator==(const Scalar& x, const Scalar& y) {
    return x.ring == y.ring && x.c == y.c;
  }

  Scalar operator*(const Rat& r) const;
  Scalar operator/(const Rat& r) const;

  // Lexicographic key used for canonical choices.
  friend std::strong_ordering lex_order(const Scalar& x, const Scalar& y);

  std::string str() const;
  double approx_re() const;
  double approx_im() const;  // coefficient of i (quadratic only)
};

// The unit group of the ring: 2, 4, 6, 2 or 24 elements.
std::vector<Scalar> units(Ring r);

// Ring elements of norm n, one representative per equivalence class: unit
// multiples for the commutative rings, two-sided unit multiplication for the
// Hurwitz order. Deterministic canonical representatives, sorted.
std::vector<Scalar> enumerate_norm_reps(Ring r, const Int& n);

// All ring elements of norm exactly n (no quotient).
std::vector<Scalar> all_of_norm(Ring r, const Int& n);

// Greatest common divisor in O_d / Z (Euclidean); greatest common right
// divisor in the Hurwitz order. Zero inputs are skipped; all-zero input is
// rejected.
Scalar gcd_content(const std::vector<Scalar>& xs);

// True when no non-unit lambda divides every entry (on the right for
// quaternions). Rejects the zero vector.
bool is_primitive(const std::vector<Scalar>& v);

// Parses entry syntax used by the data files: sum of terms, each an optional
// rational coefficient times one of the symbols t (tau), w (i*sqrt d), i, j,
// k, s (sigma), b (conj sigma). Examples: "-t-2", "w", "s-2+i-j", "1/2".
Scalar parse_scalar(const std::string& text, Ring r);

}  // namespace cusplat
