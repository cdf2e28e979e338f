#include "cpbase/matrix.hpp"

#include <algorithm>

namespace cpb {

Matrix Matrix::identity(FieldPtr field, unsigned n) {
  Matrix m(std::move(field), n);
  for (unsigned i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

Matrix Matrix::scalar(FieldPtr field, unsigned n, scalar_t lambda) {
  Matrix m(std::move(field), n);
  for (unsigned i = 0; i < n; ++i) m.set(i, i, lambda);
  return m;
}

Matrix Matrix::diagonal(FieldPtr field, const Vector& entries) {
  Matrix m(std::move(field), static_cast<unsigned>(entries.size()));
  for (unsigned i = 0; i < entries.size(); ++i) m.set(i, i, entries[i]);
  return m;
}

Matrix Matrix::permutation(FieldPtr field, const std::vector<unsigned>& images) {
  const unsigned n = static_cast<unsigned>(images.size());
  Matrix m(std::move(field), n);
  for (unsigned i = 0; i < n; ++i) m.set(images[i], i, 1);
  return m;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (n_ != rhs.n_ || !field_->same_as(*rhs.field_)) throw FieldMismatch("matrix product across incompatible spaces");
  const Field& F = *field_;
  Matrix out(field_, n_);
  for (unsigned i = 0; i < n_; ++i) {
    for (unsigned k = 0; k < n_; ++k) {
      scalar_t aik = at(i, k);
      if (aik == 0) continue;
      for (unsigned j = 0; j < n_; ++j) {
        scalar_t prod = F.mul(aik, rhs.at(k, j));
        out.set(i, j, F.add(out.at(i, j), prod));
      }
    }
  }
  return out;
}

Vector Matrix::apply(const Vector& v) const {
  const Field& F = *field_;
  Vector out(n_, 0);
  for (unsigned i = 0; i < n_; ++i) {
    scalar_t s = 0;
    for (unsigned j = 0; j < n_; ++j) s = F.add(s, F.mul(at(i, j), v[j]));
    out[i] = s;
  }
  return out;
}

bool Matrix::fixes(const Vector& v) const {
  const Field& F = *field_;
  for (unsigned i = 0; i < n_; ++i) {
    scalar_t s = 0;
    for (unsigned j = 0; j < n_; ++j) s = F.add(s, F.mul(at(i, j), v[j]));
    if (s != v[i]) return false;
  }
  return true;
}

bool Matrix::is_identity() const {
  for (unsigned i = 0; i < n_; ++i)
    for (unsigned j = 0; j < n_; ++j)
      if (at(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

std::optional<scalar_t> Matrix::scalar_value() const {
  scalar_t d = at(0, 0);
  if (d == 0) return std::nullopt;
  for (unsigned i = 0; i < n_; ++i)
    for (unsigned j = 0; j < n_; ++j)
      if (at(i, j) != (i == j ? d : 0)) return std::nullopt;
  return d;
}

bool Matrix::is_scalar() const { return scalar_value().has_value(); }

std::string Matrix::key() const {
  std::string s;
  s.reserve(a_.size() * 4);
  for (scalar_t v : a_) {
    s.push_back(static_cast<char>(v & 0xff));
    s.push_back(static_cast<char>((v >> 8) & 0xff));
    s.push_back(static_cast<char>((v >> 16) & 0xff));
    s.push_back(static_cast<char>((v >> 24) & 0xff));
  }
  return s;
}

namespace {

// In-place reduced row echelon form of an r x c array; returns pivot columns.
std::vector<unsigned> rref(std::vector<Vector>& rows, const Field& F) {
  std::vector<unsigned> pivots;
  const unsigned r = static_cast<unsigned>(rows.size());
  const unsigned c = r == 0 ? 0 : static_cast<unsigned>(rows[0].size());
  unsigned lead = 0;
  for (unsigned col = 0; col < c && lead < r; ++col) {
    // First nonzero entry at or below `lead` becomes the pivot.
    unsigned pr = lead;
    while (pr < r && rows[pr][col] == 0) ++pr;
    if (pr == r) continue;
    std::swap(rows[lead], rows[pr]);
    scalar_t piv = rows[lead][col];
    if (piv != 1) {
      scalar_t il = F.inv(piv);
      for (unsigned j = col; j < c; ++j) rows[lead][j] = F.mul(rows[lead][j], il);
    }
    for (unsigned i = 0; i < r; ++i) {
      if (i == lead) continue;
      scalar_t f = rows[i][col];
      if (f == 0) continue;
      for (unsigned j = col; j < c; ++j) rows[i][j] = F.sub(rows[i][j], F.mul(f, rows[lead][j]));
    }
    pivots.push_back(col);
    ++lead;
  }
  rows.resize(pivots.size(), Vector{});
  return pivots;
}

}  // namespace

bool Subspace::contains(const Vector& v) const {
  // Reduce v against the RREF basis and test for the zero vector.
  const Field& F = *field;
  Vector w = v;
  for (const Vector& row : basis) {
    unsigned piv = 0;
    while (piv < ambient && row[piv] == 0) ++piv;
    if (piv == ambient) continue;
    scalar_t f = w[piv];
    if (f == 0) continue;
    for (unsigned j = piv; j < ambient; ++j) w[j] = F.sub(w[j], F.mul(f, row[j]));
  }
  return std::all_of(w.begin(), w.end(), [](scalar_t x) { return x == 0; });
}

unsigned mat_rank(const Matrix& m) {
  const unsigned n = m.dim();
  std::vector<Vector> rows(n, Vector(n));
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) rows[i][j] = m.at(i, j);
  return static_cast<unsigned>(rref(rows, *m.field()).size());
}

Subspace mat_kernel(const Matrix& m) {
  const Field& F = *m.field();
  const unsigned n = m.dim();
  std::vector<Vector> rows(n, Vector(n));
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) rows[i][j] = m.at(i, j);
  std::vector<unsigned> pivots = rref(rows, F);

  // Free columns parameterise the kernel; back-substitute one basis vector
  // per free column, then normalise the collection itself to RREF.
  std::vector<bool> is_pivot(n, false);
  for (unsigned p : pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (unsigned freeCol = 0; freeCol < n; ++freeCol) {
    if (is_pivot[freeCol]) continue;
    Vector v(n, 0);
    v[freeCol] = 1;
    for (unsigned r = 0; r < pivots.size(); ++r) v[pivots[r]] = F.neg(rows[r][freeCol]);
    basis.push_back(std::move(v));
  }
  rref(basis, F);
  Subspace s;
  s.field = m.field();
  s.ambient = n;
  s.basis = std::move(basis);
  return s;
}

Matrix Matrix::inverse() const {
  const Field& F = *field_;
  const unsigned n = n_;
  // Row-reduce [M | I]; M invertible iff the left block reaches I.
  std::vector<Vector> rows(n, Vector(2 * n, 0));
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = 0; j < n; ++j) rows[i][j] = at(i, j);
    rows[i][n + i] = 1;
  }
  std::vector<unsigned> pivots = rref(rows, F);
  if (pivots.size() != n || pivots.back() != n - 1) throw SingularMatrix("matrix has no inverse");
  for (unsigned i = 0; i < n; ++i)
    if (pivots[i] != i) throw SingularMatrix("matrix has no inverse");
  Matrix out(field_, n);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) out.set(i, j, rows[i][n + j]);
  return out;
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
  if (!a.field()->same_as(*b.field())) throw FieldMismatch("kronecker factors over different fields");
  const Field& F = *a.field();
  const unsigned na = a.dim(), nb = b.dim();
  Matrix out(a.field(), na * nb);
  for (unsigned i = 0; i < na; ++i)
    for (unsigned j = 0; j < na; ++j) {
      scalar_t aij = a.at(i, j);
      if (aij == 0) continue;
      for (unsigned k = 0; k < nb; ++k)
        for (unsigned l = 0; l < nb; ++l) out.set(i * nb + k, j * nb + l, F.mul(aij, b.at(k, l)));
    }
  return out;
}

Subspace fix_space(const Matrix& m, scalar_t lambda) {
  const Field& F = *m.field();
  Matrix shifted = m;
  for (unsigned i = 0; i < m.dim(); ++i) shifted.set(i, i, F.sub(shifted.at(i, i), lambda));
  return mat_kernel(shifted);
}

unsigned support(const Matrix& m) { return m.dim() - fix_space(m, 1).dim(); }

unsigned projective_support(const Matrix& m) {
  const Field& F = *m.field();
  unsigned best = 0;
  for (std::uint64_t lam = 1; lam < F.order(); ++lam) {
    unsigned d = fix_space(m, static_cast<scalar_t>(lam)).dim();
    best = std::max(best, d);
    if (best == m.dim()) break;
  }
  return m.dim() - best;
}

}  // namespace cpb
