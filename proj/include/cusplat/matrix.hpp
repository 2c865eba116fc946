#pragma once

#include <vector>

#include "cusplat/scalar.hpp"

namespace cusplat {

// Dense square matrix over the fraction field, dim 2 or 3.
class Mat {
 public:
  Ring ring;
  int n = 0;
  std::vector<Scalar> e;  // row-major

  Mat() = default;
  Mat(Ring r, int dim) : ring(r), n(dim), e(dim * dim, Scalar::zero(r)) {}

  static Mat identity(Ring r, int dim);

  Scalar& at(int i, int j) { return e[i * n + j]; }
  const Scalar& at(int i, int j) const { return e[i * n + j]; }

  Mat operator*(const Mat& o) const;
  std::vector<Scalar> operator*(const std::vector<Scalar>& v) const;
  Mat adjoint() const;  // conjugate transpose
  // Multiplies every entry by u on the right (the scalar matrix u*Id acting
  // from the right).
  Mat scaled_right(const Scalar& u) const;
  Mat operator-() const;

  bool operator==(const Mat& o) const { return n == o.n && e == o.e; }
  bool is_integral() const;
  bool is_identity() const;

  std::string str() const;
  std::string key() const;  // canonical serialization for table lookups
};

// Signature of the invariant bilinear/sesquilinear pairing. The Siegel model
// uses the anti-diagonal Hermitian J; the PSL(2,Z) toy case preserves the
// 2x2 symplectic form instead (det = 1).
enum class FormKind { HermitianJ, Symplectic };

struct Form {
  FormKind kind = FormKind::HermitianJ;
  Ring ring;
  int n = 3;

  Mat J() const;  // HermitianJ only
  // <Z,W>: W* J Z for the Hermitian form, the determinant pairing for the
  // symplectic one.
  Scalar pairing(const std::vector<Scalar>& Z, const std::vector<Scalar>& W) const;
  bool is_isometry(const Mat& A) const;        // form-preserving over the field
  bool is_in_group(const Mat& A) const;        // isometry with integral entries
  Mat inverse(const Mat& A) const;             // group-element inverse
};

// A = B * (u Id) for some unit u of the order. For the Hurwitz order only
// u = +-1 are projectively trivial.
bool equal_up_to_unit(const Mat& A, const Mat& B, Scalar* unit_out = nullptr);

// Canonical representative of {A * u : u unit} (projective normal form used
// as a hash key). For quaternions u ranges over +-1.
Mat canonical_up_to_unit(const Mat& A);

}  // namespace cusplat
