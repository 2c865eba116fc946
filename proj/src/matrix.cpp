#include "cusplat/matrix.hpp"

#include <algorithm>

namespace cusplat {

Mat Mat::identity(Ring r, int dim) {
  Mat m(r, dim);
  for (int i = 0; i < dim; ++i) m.at(i, i) = Scalar::one(r);
  return m;
}

Mat Mat::operator*(const Mat& o) const {
  if (n != o.n) throw std::logic_error("matrix dim mismatch");
  Mat out(ring, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Scalar acc = Scalar::zero(ring);
      for (int k = 0; k < n; ++k) acc += at(i, k) * o.at(k, j);
      out.at(i, j) = acc;
    }
  return out;
}

std::vector<Scalar> Mat::operator*(const std::vector<Scalar>& v) const {
  if ((int)v.size() != n) throw std::logic_error("matrix/vector dim mismatch");
  std::vector<Scalar> out(n, Scalar::zero(ring));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) out[i] += at(i, k) * v[k];
  return out;
}

Mat Mat::adjoint() const {
  Mat out(ring, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.at(i, j) = at(j, i).conj();
  return out;
}

Mat Mat::scaled_right(const Scalar& u) const {
  Mat out(*this);
  for (auto& x : out.e) x = x * u;
  return out;
}

Mat Mat::operator-() const {
  Mat out(*this);
  for (auto& x : out.e) x = -x;
  return out;
}

bool Mat::is_integral() const {
  return std::all_of(e.begin(), e.end(),
                     [](const Scalar& x) { return x.is_integral(); });
}

bool Mat::is_identity() const {
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Scalar& x = at(i, j);
      if (i == j ? !(x == Scalar::one(ring)) : !x.is_zero()) return false;
    }
  return true;
}

std::string Mat::str() const {
  std::string s = "[";
  for (int i = 0; i < n; ++i) {
    s += i ? "; " : "";
    for (int j = 0; j < n; ++j) s += (j ? ", " : "") + at(i, j).str();
  }
  return s + "]";
}

std::string Mat::key() const {
  std::string s;
  for (const auto& x : e)
    for (const auto& r : x.c) s += fmt_rat(r) + "|";
  return s;
}

Mat Form::J() const {
  if (kind != FormKind::HermitianJ) throw std::logic_error("no J matrix");
  Mat m(ring, n);
  for (int i = 0; i < n; ++i) m.at(i, n - 1 - i) = Scalar::one(ring);
  if (n == 3) m.at(1, 1) = Scalar::one(ring);
  return m;
}

Scalar Form::pairing(const std::vector<Scalar>& Z,
                     const std::vector<Scalar>& W) const {
  if ((int)Z.size() != n || (int)W.size() != n)
    throw std::logic_error("pairing dim mismatch");
  if (kind == FormKind::HermitianJ) {
    // W* J Z with J the anti-diagonal form.
    Scalar acc = Scalar::zero(ring);
    for (int i = 0; i < n; ++i) acc += W[n - 1 - i].conj() * Z[i];
    return acc;
  }
  // det pairing: invariant under det-1 matrices (entries commute over Z/Q).
  return Z[0] * W[1] - Z[1] * W[0];
}

bool Form::is_isometry(const Mat& A) const {
  if (A.n != n) return false;
  // Column pairings must reproduce the Gram matrix of the form.
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      std::vector<Scalar> ca(n, Scalar::zero(ring)), cb(n, Scalar::zero(ring));
      for (int i = 0; i < n; ++i) {
        ca[i] = A.at(i, a);
        cb[i] = A.at(i, b);
      }
      std::vector<Scalar> ea(n, Scalar::zero(ring)), eb(n, Scalar::zero(ring));
      ea[a] = Scalar::one(ring);
      eb[b] = Scalar::one(ring);
      if (!(pairing(ca, cb) == pairing(ea, eb))) return false;
    }
  return true;
}

bool Form::is_in_group(const Mat& A) const {
  return A.is_integral() && is_isometry(A);
}

Mat Form::inverse(const Mat& A) const {
  Mat inv(ring, n);
  if (kind == FormKind::HermitianJ) {
    inv = J() * A.adjoint() * J();
  } else {
    inv.at(0, 0) = A.at(1, 1);
    inv.at(0, 1) = -A.at(0, 1);
    inv.at(1, 0) = -A.at(1, 0);
    inv.at(1, 1) = A.at(0, 0);
  }
  if (!(A * inv).is_identity())
    throw std::logic_error("inverse of a non-isometry: " + A.str());
  return inv;
}

bool equal_up_to_unit(const Mat& A, const Mat& B, Scalar* unit_out) {
  if (A.n != B.n || !(A.ring == B.ring)) return false;
  std::vector<Scalar> us;
  if (A.ring.kind == RingKind::Quaternion) {
    us = {Scalar::one(A.ring), -Scalar::one(A.ring)};
  } else {
    us = units(A.ring);
  }
  for (const auto& u : us) {
    if (A == B.scaled_right(u)) {
      if (unit_out) *unit_out = u;
      return true;
    }
  }
  return false;
}

Mat canonical_up_to_unit(const Mat& A) {
  std::vector<Scalar> us;
  if (A.ring.kind == RingKind::Quaternion) {
    us = {Scalar::one(A.ring), -Scalar::one(A.ring)};
  } else {
    us = units(A.ring);
  }
  Mat best = A;
  std::string best_key = A.key();
  for (const auto& u : us) {
    Mat cand = A.scaled_right(u);
    std::string k = cand.key();
    if (k < best_key) {
      best_key = k;
      best = cand;
    }
  }
  return best;
}

}  // namespace cusplat
