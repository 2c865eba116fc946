#pragma once

#include <optional>

#include "cusplat/heisenberg.hpp"

namespace cusplat {

// Rational boundary point: either infinity (lift e_1) or a Heisenberg point.
struct BoundaryPoint {
  bool inf = false;
  HeisPoint p;

  static BoundaryPoint infinity(Ring r) {
    BoundaryPoint b;
    b.inf = true;
    b.p.zeta = Scalar::zero(r);
    return b;
  }
  static BoundaryPoint at(HeisPoint q) {
    BoundaryPoint b;
    b.p = std::move(q);
    return b;
  }

  bool operator==(const BoundaryPoint& o) const {
    return inf == o.inf && (inf || p == o.p);
  }
  std::string str() const { return inf ? "inf" : p.str(); }
};

// Standard lift psi(zeta, v, u) = ((-|zeta|^2 - u + v)/2, zeta, 1); for the
// 2x2 symplectic model the lift of x is (x, 1).
std::vector<Scalar> standard_lift(const Form& f, const HeisPoint& p,
                                  const Rat& u = Rat(0));
std::vector<Scalar> lift_infinity(const Form& f);
std::vector<Scalar> lift_of(const Form& f, const BoundaryPoint& b);

// Projectivization of an isotropic lift back to horospherical coordinates.
BoundaryPoint from_lift(const Form& f, const std::vector<Scalar>& lift);

// Primitive integral lift with the canonical unit normalization.
std::vector<Scalar> primitive_lift(const Form& f, const BoundaryPoint& b);
std::vector<Scalar> primitive_lift_vec(const Form& f,
                                       const std::vector<Scalar>& lift);

// lev(p, q) = |<P0,Q0>|^2 for primitive integral lifts; an exact integer.
Int level(const Form& f, const BoundaryPoint& p, const BoundaryPoint& q);
Int depth(const Form& f, const BoundaryPoint& p);

// Image of a boundary point under a group element.
BoundaryPoint apply(const Form& f, const Mat& A, const BoundaryPoint& p);

// cosh^2(d/2) of the Bergman distance between two interior points given by
// negative lifts.
Rat bergman_cosh2(const Form& f, const std::vector<Scalar>& Z,
                  const std::vector<Scalar>& W);

}  // namespace cusplat
