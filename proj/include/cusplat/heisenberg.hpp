#pragma once

#include <array>

#include "cusplat/matrix.hpp"

namespace cusplat {

// Point of the punctured boundary Heis(K,n) in horospherical coordinates.
// zeta is a field element; the vertical part is v = t[0]*i for the complex
// lattices (t[0] may carry a sqrt(d) component, the paper mixes both) and
// v = t[0] i + t[1] j + t[2] k for the quaternionic one. PSL(2,Z) has no
// vertical part at all.
struct HeisPoint {
  Scalar zeta;
  std::array<Surd, 3> t{Surd(0), Surd(0), Surd(0)};

  HeisPoint() = default;
  explicit HeisPoint(Scalar z) : zeta(std::move(z)) {}
  HeisPoint(Scalar z, Surd t0) : zeta(std::move(z)) { t[0] = std::move(t0); }
  HeisPoint(Scalar z, std::array<Surd, 3> tt)
      : zeta(std::move(z)), t(std::move(tt)) {}

  bool operator==(const HeisPoint& o) const {
    return zeta == o.zeta && t[0] == o.t[0] && t[1] == o.t[1] && t[2] == o.t[2];
  }

  // Lift coordinates lie in E (vertical part a multiple of i*sqrt(d); any
  // rational for d = 1 and the quaternions).
  bool is_E_rational() const;
  // The vertical part as a field element (requires E-rationality).
  Scalar v_scalar() const;

  std::string str() const;
};

// Heisenberg group law (z1,v1)(z2,v2) = (z1+z2, v1+v2+2 Im(conj(z2) z1)).
HeisPoint heis_mul(const HeisPoint& p, const HeisPoint& q);
HeisPoint heis_inv(const HeisPoint& p);

// Heisenberg translation matrix T_(zeta,v); requires an E-rational point.
Mat translation_matrix(const Form& f, const HeisPoint& p);
// Heisenberg rotation by a unitary scalar U (block diag(1, U, 1)).
Mat rotation_matrix(const Form& f, const Scalar& U);
// Quaternion conjugation C_q = q Id for a unit q.
Mat conj_matrix(const Form& f, const Scalar& q);

// Number of real horospherical coordinates: 1 (PSL(2,Z)), 3 (complex), 7
// (quaternionic).
int affine_dim(const Form& f);

// Real coordinate vector of a Heisenberg point: (Re zeta, Im zeta, t) for the
// complex case, (z_1..z_4, t_1..t_3) for the quaternionic one.
std::vector<Surd> to_affine(const Form& f, const HeisPoint& p);

// Exact fourth power of the Cygan distance between two boundary points given
// by real coordinates. Values live in Q(sqrt d).
Surd cygan4_affine(const Form& f, const std::vector<Surd>& p,
                   const std::vector<Surd>& q);
// Extended Cygan metric with heights.
Surd xcygan4_affine(const Form& f, const std::vector<Surd>& p, const Rat& up,
                    const std::vector<Surd>& q, const Rat& uq);

Surd cygan4(const Form& f, const HeisPoint& p, const HeisPoint& q);
Surd xcygan4(const Form& f, const HeisPoint& p, const Rat& up,
             const HeisPoint& q, const Rat& uq);

// Open extended Cygan ball; radius enters as its exact fourth power.
struct CyganBall {
  HeisPoint center;
  Rat r4;
  int depth = 0;  // declared depth of the center
};

bool in_ball(const Form& f, const HeisPoint& p, const Rat& u, const CyganBall& b);
bool in_ball_affine(const Form& f, const std::vector<Surd>& p, const Rat& u,
                    const CyganBall& b);

}  // namespace cusplat
