#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cpbase/field.hpp"

namespace cpb {

using Vector = std::vector<scalar_t>;

/// Dense square matrix over a finite field, row-major.
class Matrix {
 public:
  Matrix(FieldPtr field, unsigned n) : field_(std::move(field)), n_(n), a_(std::size_t(n) * n, 0) {}

  static Matrix identity(FieldPtr field, unsigned n);
  static Matrix scalar(FieldPtr field, unsigned n, scalar_t lambda);
  static Matrix diagonal(FieldPtr field, const Vector& entries);
  /// Permutation matrix P with P e_i = e_{images[i]} (0-based).
  static Matrix permutation(FieldPtr field, const std::vector<unsigned>& images);

  const FieldPtr& field() const { return field_; }
  unsigned dim() const { return n_; }

  scalar_t at(unsigned i, unsigned j) const { return a_[std::size_t(i) * n_ + j]; }
  void set(unsigned i, unsigned j, scalar_t v) { a_[std::size_t(i) * n_ + j] = v; }

  const std::vector<scalar_t>& data() const { return a_; }

  Matrix operator*(const Matrix& rhs) const;
  bool operator==(const Matrix& rhs) const { return n_ == rhs.n_ && a_ == rhs.a_; }
  bool operator!=(const Matrix& rhs) const { return !(*this == rhs); }

  Vector apply(const Vector& v) const;

  /// True when the matrix fixes v, checked row by row with early exit.
  bool fixes(const Vector& v) const;

  Matrix inverse() const;  // throws SingularMatrix
  bool is_identity() const;
  bool is_scalar() const;  // nonzero multiple of the identity
  std::optional<scalar_t> scalar_value() const;

  /// Canonical byte key (entries row-major, 4 bytes little-endian each):
  /// equal matrices over the same field produce equal keys.
  std::string key() const;

 private:
  FieldPtr field_;
  unsigned n_;
  std::vector<scalar_t> a_;
};

/// Row space in reduced row echelon form: pivot entries are 1, pivot columns
/// strictly increase, and pivot columns are zero elsewhere. The zero space
/// has an empty basis.
struct Subspace {
  FieldPtr field;
  unsigned ambient = 0;
  std::vector<Vector> basis;  // RREF rows

  unsigned dim() const { return static_cast<unsigned>(basis.size()); }
  bool contains(const Vector& v) const;
};

/// Rank via Gaussian elimination (exact field arithmetic).
unsigned mat_rank(const Matrix& m);

/// Kernel {v : Mv = 0} as a Subspace in RREF.
Subspace mat_kernel(const Matrix& m);

/// Kronecker product; block (i,j) of the result is a[i][j] * b.
/// Throws FieldMismatch when the factors live over different fields.
Matrix kronecker(const Matrix& a, const Matrix& b);

/// Eigenspace of m for eigenvalue lambda: ker(m - lambda*I).
Subspace fix_space(const Matrix& m, scalar_t lambda);

/// dim(V) - dim ker(m - I): the codimension of the fixed space.
unsigned support(const Matrix& m);

/// dim(V) minus the largest eigenspace dimension over all nonzero lambda.
/// Zero exactly for scalar matrices.
unsigned projective_support(const Matrix& m);

}  // namespace cpb
