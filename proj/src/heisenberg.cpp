#include "cusplat/heisenberg.hpp"

namespace cusplat {

bool HeisPoint::is_E_rational() const {
  switch (zeta.ring.kind) {
    case RingKind::Integers:
      return t[0].is_zero() && t[1].is_zero() && t[2].is_zero();
    case RingKind::Quadratic:
      if (!t[1].is_zero() || !t[2].is_zero()) return false;
      // v = t*i with t = b*sqrt(d); d = 1 folds the surd away.
      return zeta.ring.d == 1 ? t[0].is_rational() : t[0].a == 0;
    case RingKind::Quaternion:
      return t[0].is_rational() && t[1].is_rational() && t[2].is_rational();
  }
  return false;
}

Scalar HeisPoint::v_scalar() const {
  Ring r = zeta.ring;
  if (!is_E_rational()) throw std::domain_error("point is not E-rational");
  switch (r.kind) {
    case RingKind::Integers:
      return Scalar::zero(r);
    case RingKind::Quadratic: {
      Rat coeff = r.d == 1 ? t[0].a : t[0].b;
      return Scalar::root(r) * coeff;
    }
    case RingKind::Quaternion: {
      Scalar v(r);
      v.c[1] = t[0].a;
      v.c[2] = t[1].a;
      v.c[3] = t[2].a;
      return v;
    }
  }
  return Scalar::zero(r);
}

std::string HeisPoint::str() const {
  std::string s = "(" + zeta.str();
  switch (zeta.ring.kind) {
    case RingKind::Integers:
      break;
    case RingKind::Quadratic:
      s += ", " + t[0].str();
      break;
    case RingKind::Quaternion:
      s += ", [" + t[0].str() + "," + t[1].str() + "," + t[2].str() + "]";
      break;
  }
  return s + ")";
}

namespace {

// Imaginary (vector) part of conj(b)*a as vertical coordinates.
std::array<Surd, 3> im_conj_prod(const Scalar& a, const Scalar& b) {
  std::array<Surd, 3> out{Surd(0), Surd(0), Surd(0)};
  Ring r = a.ring;
  switch (r.kind) {
    case RingKind::Integers:
      break;
    case RingKind::Quadratic: {
      Scalar prod = b.conj() * a;
      // Im = im_coeff * sqrt(d); for d = 1 the plain coefficient of i.
      out[0] = r.d == 1 ? Surd(prod.im_coeff())
                        : Surd(Rat(0), prod.im_coeff(), r.d);
      break;
    }
    case RingKind::Quaternion: {
      Scalar prod = b.conj() * a;
      out[0] = Surd(prod.c[1]);
      out[1] = Surd(prod.c[2]);
      out[2] = Surd(prod.c[3]);
      break;
    }
  }
  return out;
}

}  // namespace

HeisPoint heis_mul(const HeisPoint& p, const HeisPoint& q) {
  HeisPoint out(p.zeta + q.zeta);
  auto tw = im_conj_prod(p.zeta, q.zeta);
  for (int i = 0; i < 3; ++i) out.t[i] = p.t[i] + q.t[i] + Surd(2) * tw[i];
  return out;
}

HeisPoint heis_inv(const HeisPoint& p) {
  HeisPoint out(-p.zeta);
  for (int i = 0; i < 3; ++i) out.t[i] = -p.t[i];
  return out;
}

Mat translation_matrix(const Form& f, const HeisPoint& p) {
  Ring r = f.ring;
  if (f.kind == FormKind::Symplectic) {
    Mat m = Mat::identity(r, 2);
    m.at(0, 1) = p.zeta;
    return m;
  }
  Scalar v = p.v_scalar();
  Mat m = Mat::identity(r, 3);
  Scalar z = p.zeta;
  m.at(0, 1) = -z.conj();
  m.at(0, 2) = (v - Scalar(r, z.norm())) / Rat(2);
  m.at(1, 2) = z;
  return m;
}

Mat rotation_matrix(const Form& f, const Scalar& U) {
  if (U.norm() != 1) throw std::domain_error("rotation by a non-unitary scalar");
  Mat m = Mat::identity(f.ring, 3);
  m.at(1, 1) = U;
  return m;
}

Mat conj_matrix(const Form& f, const Scalar& q) {
  if (f.ring.kind != RingKind::Quaternion)
    throw std::domain_error("conjugation is quaternionic only");
  if (!q.is_unit()) throw std::domain_error("conjugation by a non-unit");
  Mat m(f.ring, 3);
  for (int i = 0; i < 3; ++i) m.at(i, i) = q;
  return m;
}

int affine_dim(const Form& f) {
  switch (f.ring.kind) {
    case RingKind::Integers:
      return 1;
    case RingKind::Quadratic:
      return 3;
    case RingKind::Quaternion:
      return 7;
  }
  return 0;
}

std::vector<Surd> to_affine(const Form& f, const HeisPoint& p) {
  switch (f.ring.kind) {
    case RingKind::Integers:
      return {Surd(p.zeta.c[0])};
    case RingKind::Quadratic: {
      int d = f.ring.d;
      Surd re(p.zeta.re());
      Surd im = d == 1 ? Surd(p.zeta.im_coeff())
                       : Surd(Rat(0), p.zeta.im_coeff(), d);
      return {re, im, p.t[0]};
    }
    case RingKind::Quaternion:
      return {Surd(p.zeta.c[0]), Surd(p.zeta.c[1]), Surd(p.zeta.c[2]),
              Surd(p.zeta.c[3]), p.t[0], p.t[1], p.t[2]};
  }
  return {};
}

namespace {

struct CyganParts {
  Surd zeta2;             // |z1 - z2|^2
  std::array<Surd, 3> w;  // v1 - v2 + 2 Im(conj(z2) z1)
};

CyganParts cygan_parts(const Form& f, const std::vector<Surd>& p,
                       const std::vector<Surd>& q) {
  CyganParts out{Surd(0), {Surd(0), Surd(0), Surd(0)}};
  switch (f.ring.kind) {
    case RingKind::Integers: {
      Surd dz = p[0] - q[0];
      out.zeta2 = dz * dz;
      break;
    }
    case RingKind::Quadratic: {
      Surd dx = p[0] - q[0], dy = p[1] - q[1];
      out.zeta2 = dx * dx + dy * dy;
      // Im(conj(z2) z1) = x2 y1 - y2 x1.
      Surd im = q[0] * p[1] - q[1] * p[0];
      out.w[0] = p[2] - q[2] + Surd(2) * im;
      break;
    }
    case RingKind::Quaternion: {
      for (int i = 0; i < 4; ++i) {
        Surd dz = p[i] - q[i];
        out.zeta2 += dz * dz;
      }
      const Surd &a0 = p[0], &a1 = p[1], &a2 = p[2], &a3 = p[3];
      const Surd &b0 = q[0], &b1 = q[1], &b2 = q[2], &b3 = q[3];
      // Vector part of conj(b) * a.
      Surd im_i = b0 * a1 - b1 * a0 - b2 * a3 + b3 * a2;
      Surd im_j = b0 * a2 - b2 * a0 - b3 * a1 + b1 * a3;
      Surd im_k = b0 * a3 - b3 * a0 - b1 * a2 + b2 * a1;
      out.w[0] = p[4] - q[4] + Surd(2) * im_i;
      out.w[1] = p[5] - q[5] + Surd(2) * im_j;
      out.w[2] = p[6] - q[6] + Surd(2) * im_k;
      break;
    }
  }
  return out;
}

}  // namespace

Surd cygan4_affine(const Form& f, const std::vector<Surd>& p,
                   const std::vector<Surd>& q) {
  auto parts = cygan_parts(f, p, q);
  Surd s = parts.zeta2 * parts.zeta2;
  for (const auto& w : parts.w) s += w * w;
  return s;
}

Surd xcygan4_affine(const Form& f, const std::vector<Surd>& p, const Rat& up,
                    const std::vector<Surd>& q, const Rat& uq) {
  auto parts = cygan_parts(f, p, q);
  Rat du = up - uq;
  if (du < 0) du = -du;
  Surd first = parts.zeta2 + Surd(du);
  Surd s = first * first;
  for (const auto& w : parts.w) s += w * w;
  return s;
}

Surd cygan4(const Form& f, const HeisPoint& p, const HeisPoint& q) {
  return cygan4_affine(f, to_affine(f, p), to_affine(f, q));
}

Surd xcygan4(const Form& f, const HeisPoint& p, const Rat& up,
             const HeisPoint& q, const Rat& uq) {
  return xcygan4_affine(f, to_affine(f, p), up, to_affine(f, q), uq);
}

bool in_ball(const Form& f, const HeisPoint& p, const Rat& u,
             const CyganBall& b) {
  return xcygan4(f, p, u, b.center, Rat(0)) < Surd(b.r4);
}

bool in_ball_affine(const Form& f, const std::vector<Surd>& p, const Rat& u,
                    const CyganBall& b) {
  return xcygan4_affine(f, p, u, to_affine(f, b.center), Rat(0)) < Surd(b.r4);
}

}  // namespace cusplat
