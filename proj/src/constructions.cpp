#include "cpbase/constructions.hpp"

#include <algorithm>
#include <numeric>

#include "cpbase/numeric.hpp"

namespace cpb {

std::string family_name(Family f) {
  switch (f) {
    case Family::Scalars: return "scalars";
    case Family::Diagonal: return "diagonal";
    case Family::DiagonalWreath: return "diagonal_wreath";
    case Family::SymNatural: return "sym_natural";
    case Family::AltNatural: return "alt_natural";
    case Family::DeletedPerm: return "deleted_perm";
    case Family::Heisenberg: return "heisenberg";
    case Family::Tensor: return "tensor";
  }
  return "?";
}

Family family_from_name(const std::string& name) {
  for (Family f : {Family::Scalars, Family::Diagonal, Family::DiagonalWreath, Family::SymNatural,
                   Family::AltNatural, Family::DeletedPerm, Family::Heisenberg, Family::Tensor})
    if (family_name(f) == name) return f;
  throw ConfigError("unknown group family: " + name);
}

bool family_includes_scalars(Family f) {
  switch (f) {
    case Family::Scalars:
    case Family::Diagonal:        // all diagonal matrices include the scalar ones
    case Family::DiagonalWreath:  // contains the full diagonal group
    case Family::Heisenberg:      // the scalar generator is part of the construction
      return true;
    case Family::SymNatural:
    case Family::AltNatural:
    case Family::DeletedPerm:  // kept bare so base counts match the product formula
    case Family::Tensor:
      return false;
  }
  return false;
}

std::string GroupSpec::label() const {
  std::uint64_t q = 1;
  for (unsigned i = 0; i < e; ++i) q *= p;
  std::string base;
  switch (family) {
    case Family::Scalars: base = "scalars(n=" + std::to_string(size) + ",q=" + std::to_string(q) + ")"; break;
    case Family::Diagonal: base = "diagonal(n=" + std::to_string(size) + ",q=" + std::to_string(q) + ")"; break;
    case Family::DiagonalWreath:
      base = "diagonal_wreath(n=" + std::to_string(size) + ",q=" + std::to_string(q) + ")";
      break;
    case Family::SymNatural: base = "sym_natural(m=" + std::to_string(size) + ",q=" + std::to_string(q) + ")"; break;
    case Family::AltNatural: base = "alt_natural(m=" + std::to_string(size) + ",q=" + std::to_string(q) + ")"; break;
    case Family::DeletedPerm: base = "deleted_perm(m=" + std::to_string(size) + ",q=" + std::to_string(q) + ")"; break;
    case Family::Heisenberg: base = "heisenberg(r=" + std::to_string(size) + ",q=" + std::to_string(q) + ")"; break;
    case Family::Tensor:
      base = "tensor(" + (factors.size() > 0 ? factors[0].label() : std::string("?")) + "," +
             (factors.size() > 1 ? factors[1].label() : std::string("?")) + ")";
      break;
  }
  if (with_scalars.value_or(false) && !family_includes_scalars(family)) base = "Z*" + base;
  return base;
}

Matrix perm_matrix(const FieldPtr& field, const std::vector<unsigned>& images) {
  return Matrix::permutation(field, images);
}

Matrix deleted_matrix(const FieldPtr& field, const std::vector<unsigned>& images) {
  const Field& F = *field;
  const unsigned m = static_cast<unsigned>(images.size());
  Matrix out(field, m - 1);
  const scalar_t one = 1, minus = F.neg(1);
  for (unsigned j = 0; j + 1 < m; ++j) {
    // f_j = e_j - e_{j+1} maps to e_a - e_b with a = images[j], b = images[j+1];
    // e_a - e_b telescopes into consecutive f_i.
    unsigned a = images[j], b = images[j + 1];
    if (a < b)
      for (unsigned i = a; i < b; ++i) out.set(i, j, one);
    else
      for (unsigned i = b; i < a; ++i) out.set(i, j, minus);
  }
  return out;
}

Vector natural_to_deleted(const FieldPtr& field, const Vector& v) {
  const Field& F = *field;
  const unsigned m = static_cast<unsigned>(v.size());
  if (m == 0 || m % F.characteristic() == 0)
    throw CoprimalityViolated("projection needs the characteristic coprime to the length");
  scalar_t sum = 0;
  for (scalar_t x : v) sum = F.add(sum, x);
  // Mean of the coordinates: the coefficient of the all-ones summand.
  scalar_t mInField = static_cast<scalar_t>(m % F.characteristic());
  scalar_t mean = F.div(sum, F.element(mInField));
  // Prefix sums of the centred vector are exactly the f_i coordinates.
  Vector out(m - 1, 0);
  scalar_t acc = 0;
  for (unsigned i = 0; i + 1 < m; ++i) {
    acc = F.add(acc, F.sub(v[i], mean));
    out[i] = acc;
  }
  return out;
}

namespace {

std::vector<unsigned> transposition01(unsigned m) {
  std::vector<unsigned> img(m);
  std::iota(img.begin(), img.end(), 0u);
  if (m >= 2) std::swap(img[0], img[1]);
  return img;
}

std::vector<unsigned> full_cycle(unsigned m) {
  std::vector<unsigned> img(m);
  for (unsigned i = 0; i < m; ++i) img[i] = (i + 1) % m;
  return img;
}

std::vector<unsigned> three_cycle012(unsigned m) {
  std::vector<unsigned> img(m);
  std::iota(img.begin(), img.end(), 0u);
  img[0] = 1;
  img[1] = 2;
  img[2] = 0;
  return img;
}

// (2 3 ... m) in 1-based terms: fixes point 0, cycles the rest.
std::vector<unsigned> cycle_from_second(unsigned m) {
  std::vector<unsigned> img(m);
  img[0] = 0;
  for (unsigned i = 1; i < m; ++i) img[i] = i + 1 < m ? i + 1 : 1;
  return img;
}

void require_perm_coprime(std::uint64_t p, unsigned m, const std::string& what) {
  if (p <= m)
    throw CoprimalityViolated(what + " needs characteristic > " + std::to_string(m) +
                              " (got " + std::to_string(p) + ")");
}

}  // namespace

MatrixGroup build(const GroupSpec& spec, std::uint64_t field_cap) {
  if (spec.family == Family::Tensor) {
    if (spec.factors.size() != 2) throw BadParameters("tensor takes exactly two factors");
    MatrixGroup a = build(spec.factors[0], field_cap);
    MatrixGroup b = build(spec.factors[1], field_cap);
    if (!a.field->same_as(*b.field)) throw FieldMismatch("tensor factors over different fields");
    std::vector<Matrix> gens;
    Matrix ia = Matrix::identity(a.field, a.dim), ib = Matrix::identity(b.field, b.dim);
    for (const Matrix& g : a.generators) gens.push_back(kronecker(g, ib));
    for (const Matrix& h : b.generators) gens.push_back(kronecker(ia, h));
    if (spec.with_scalars.value_or(false))
      gens.push_back(Matrix::scalar(a.field, a.dim * b.dim, a.field->generator()));
    return make_group(a.field, a.dim * b.dim, std::move(gens), spec.label());
  }

  FieldPtr F = Field::make(spec.p, spec.e, field_cap);
  const scalar_t omega = F->generator();
  const unsigned sz = spec.size;
  std::vector<Matrix> gens;
  unsigned dim = 0;

  switch (spec.family) {
    case Family::Scalars: {
      if (sz < 1) throw BadParameters("scalars needs n >= 1");
      dim = sz;
      gens.push_back(Matrix::scalar(F, dim, omega));
      break;
    }
    case Family::Diagonal: {
      if (sz < 1) throw BadParameters("diagonal needs n >= 1");
      dim = sz;
      for (unsigned i = 0; i < dim; ++i) {
        Vector d(dim, 1);
        d[i] = omega;
        gens.push_back(Matrix::diagonal(F, d));
      }
      break;
    }
    case Family::DiagonalWreath: {
      if (sz < 1) throw BadParameters("diagonal_wreath needs n >= 1");
      if (sz % F->characteristic() == 0)
        throw CoprimalityViolated("wreath cycle length divisible by the characteristic");
      dim = sz;
      for (unsigned i = 0; i < dim; ++i) {
        Vector d(dim, 1);
        d[i] = omega;
        gens.push_back(Matrix::diagonal(F, d));
      }
      gens.push_back(perm_matrix(F, full_cycle(dim)));
      break;
    }
    case Family::SymNatural: {
      if (sz < 1) throw BadParameters("sym_natural needs m >= 1");
      require_perm_coprime(F->characteristic(), sz, "sym_natural");
      dim = sz;
      if (sz >= 2) {
        gens.push_back(perm_matrix(F, transposition01(sz)));
        gens.push_back(perm_matrix(F, full_cycle(sz)));
      }
      break;
    }
    case Family::AltNatural: {
      if (sz < 1) throw BadParameters("alt_natural needs m >= 1");
      require_perm_coprime(F->characteristic(), sz, "alt_natural");
      dim = sz;
      if (sz >= 3) {
        gens.push_back(perm_matrix(F, three_cycle012(sz)));
        gens.push_back(perm_matrix(F, sz % 2 == 1 ? full_cycle(sz) : cycle_from_second(sz)));
      }
      break;
    }
    case Family::DeletedPerm: {
      if (sz < 2) throw BadParameters("deleted_perm needs m >= 2");
      require_perm_coprime(F->characteristic(), sz, "deleted_perm");
      dim = sz - 1;
      gens.push_back(deleted_matrix(F, transposition01(sz)));
      gens.push_back(deleted_matrix(F, full_cycle(sz)));
      break;
    }
    case Family::Heisenberg: {
      const std::uint64_t r = sz;
      if (!is_prime(r)) throw BadParameters("heisenberg needs prime r");
      if ((F->order() - 1) % r != 0)
        throw BadParameters("heisenberg needs r dividing q-1");
      dim = sz;
      const scalar_t omega_r = F->pow(omega, (F->order() - 1) / r);
      Vector d(dim);
      scalar_t cur = 1;
      for (unsigned i = 0; i < dim; ++i) {
        d[i] = cur;
        cur = F->mul(cur, omega_r);
      }
      gens.push_back(Matrix::diagonal(F, d));
      gens.push_back(perm_matrix(F, full_cycle(dim)));
      gens.push_back(Matrix::scalar(F, dim, omega));
      break;
    }
    case Family::Tensor:
      break;  // handled above
  }

  if (spec.with_scalars.value_or(false) && !family_includes_scalars(spec.family))
    gens.push_back(Matrix::scalar(F, dim, omega));

  return make_group(F, dim, std::move(gens), spec.label());
}

}  // namespace cpb
