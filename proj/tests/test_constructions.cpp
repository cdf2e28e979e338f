#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "cpbase/constructions.hpp"

using namespace cpb;

namespace {

GroupSpec spec_of(Family f, unsigned size, std::uint64_t p, unsigned e = 1) {
  GroupSpec s;
  s.family = f;
  s.size = size;
  s.p = p;
  s.e = e;
  return s;
}

MatrixGroup enumerated(const GroupSpec& s) {
  MatrixGroup g = build(s);
  enumerate(g);
  return g;
}

std::vector<unsigned> compose(const std::vector<unsigned>& sigma, const std::vector<unsigned>& pi) {
  std::vector<unsigned> out(pi.size());
  for (std::size_t i = 0; i < pi.size(); ++i) out[i] = sigma[pi[i]];
  return out;
}

std::set<std::string> key_set(const MatrixGroup& g) {
  std::set<std::string> keys;
  for (const Matrix& m : *g.elements) keys.insert(m.key());
  return keys;
}

}  // namespace

TEST_CASE("family names round-trip") {
  for (Family f : {Family::Scalars, Family::Diagonal, Family::DiagonalWreath, Family::SymNatural,
                   Family::AltNatural, Family::DeletedPerm, Family::Heisenberg, Family::Tensor})
    CHECK(family_from_name(family_name(f)) == f);
  CHECK_THROWS_AS((void)family_from_name("nope"), ConfigError);
}

TEST_CASE("orders of the built families") {
  CHECK(enumerated(spec_of(Family::Scalars, 2, 5)).order() == 4);
  CHECK(enumerated(spec_of(Family::Diagonal, 2, 5)).order() == 16);
  CHECK(enumerated(spec_of(Family::Diagonal, 2, 3, 2)).order() == 64);  // (9-1)^2
  CHECK(enumerated(spec_of(Family::DiagonalWreath, 3, 7)).order() == 648);  // 6^3 * 3
  CHECK(enumerated(spec_of(Family::SymNatural, 3, 7)).order() == 6);
  CHECK(enumerated(spec_of(Family::AltNatural, 3, 7)).order() == 3);
  CHECK(enumerated(spec_of(Family::AltNatural, 4, 7)).order() == 12);
  CHECK(enumerated(spec_of(Family::DeletedPerm, 3, 7)).order() == 6);
  CHECK(enumerated(spec_of(Family::Heisenberg, 3, 7)).order() == 54);  // r^2 * (q-1)
  CHECK(enumerated(spec_of(Family::Heisenberg, 2, 5)).order() == 16);
}

TEST_CASE("dimensions and coprimality") {
  for (const GroupSpec& s :
       {spec_of(Family::Scalars, 2, 5), spec_of(Family::Diagonal, 2, 5),
        spec_of(Family::DiagonalWreath, 3, 7), spec_of(Family::SymNatural, 3, 7),
        spec_of(Family::AltNatural, 4, 7), spec_of(Family::DeletedPerm, 3, 7),
        spec_of(Family::Heisenberg, 3, 7)}) {
    MatrixGroup g = enumerated(s);
    CHECK(coprime_check(g));
    CHECK(g.label == s.label());
    unsigned want = s.size;
    if (s.family == Family::DeletedPerm) want = s.size - 1;
    CHECK(g.dim == want);
  }
}

TEST_CASE("wreath product contains the diagonal subgroup") {
  MatrixGroup diag = enumerated(spec_of(Family::Diagonal, 3, 7));
  MatrixGroup wr = enumerated(spec_of(Family::DiagonalWreath, 3, 7));
  CHECK(wr.order() == 3 * diag.order());
  std::set<std::string> wkeys = key_set(wr);
  for (const Matrix& m : *diag.elements) CHECK(wkeys.count(m.key()) == 1);
}

TEST_CASE("extraspecial-type commutator structure") {
  MatrixGroup h = enumerated(spec_of(Family::Heisenberg, 3, 7));
  REQUIRE(h.generators.size() == 3);
  Matrix c = commutator(h.generators[0], h.generators[1]);
  CHECK(c.is_scalar());
  CHECK_FALSE(c.is_identity());
  auto lambda = c.scalar_value();
  REQUIRE(lambda.has_value());
  CHECK(h.field->multiplicative_order(*lambda) == 3);

  // The set of all commutator values is exactly the order-3 scalar subgroup.
  std::set<std::string> comms;
  for (const Matrix& a : *h.elements)
    for (const Matrix& b : *h.elements) comms.insert(commutator(a, b).key());
  CHECK(comms.size() == 3);
  CHECK(comms.count(Matrix::identity(h.field, 3).key()) == 1);
  CHECK(comms.count(c.key()) == 1);
  CHECK(comms.count((c * c).key()) == 1);
}

TEST_CASE("permutation matrices compose like permutations") {
  FieldPtr F = Field::make(7, 1);
  std::vector<unsigned> sigma = {2, 0, 1}, pi = {1, 0, 2};
  CHECK(perm_matrix(F, sigma) * perm_matrix(F, pi) == perm_matrix(F, compose(sigma, pi)));
  CHECK(perm_matrix(F, {0, 1, 2}).is_identity());
}

TEST_CASE("sum-zero module action, hand-checked matrix") {
  // Basis f_0 = e_0 - e_1, f_1 = e_1 - e_2. The transposition (0 1) sends
  // f_0 to -f_0 and f_1 to f_0 + f_1, so its matrix over GF(5) is [[4,1],[0,1]].
  FieldPtr F = Field::make(5, 1);
  Matrix t = deleted_matrix(F, {1, 0, 2});
  CHECK(t.at(0, 0) == 4);
  CHECK(t.at(0, 1) == 1);
  CHECK(t.at(1, 0) == 0);
  CHECK(t.at(1, 1) == 1);
}

TEST_CASE("sum-zero module is a faithful representation of Sym(4)") {
  FieldPtr F = Field::make(5, 1);
  std::vector<std::vector<unsigned>> all;
  std::vector<unsigned> p = {0, 1, 2, 3};
  do all.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  REQUIRE(all.size() == 24);

  std::set<std::string> images;
  for (const auto& s : all) images.insert(deleted_matrix(F, s).key());
  CHECK(images.size() == 24);  // injective

  for (const auto& s : all)
    for (const auto& q : all)
      CHECK(deleted_matrix(F, s) * deleted_matrix(F, q) == deleted_matrix(F, compose(s, q)));
}

TEST_CASE("generator relations in the sum-zero representation") {
  FieldPtr F = Field::make(7, 1);
  const unsigned m = 5;
  std::vector<unsigned> tau(m), gamma(m);
  std::iota(tau.begin(), tau.end(), 0u);
  std::swap(tau[0], tau[1]);
  for (unsigned i = 0; i < m; ++i) gamma[i] = (i + 1) % m;
  Matrix T = deleted_matrix(F, tau), G = deleted_matrix(F, gamma);
  CHECK((T * T).is_identity());
  Matrix gm = Matrix::identity(F, m - 1);
  for (unsigned i = 0; i < m; ++i) gm = gm * G;
  CHECK(gm.is_identity());
  Matrix tg = T * G;  // image of (0 1) composed after the m-cycle: an (m-1)-cycle
  Matrix acc = Matrix::identity(F, m - 1);
  for (unsigned i = 0; i < m - 1; ++i) acc = acc * tg;
  CHECK(acc.is_identity());
  Matrix shorter = Matrix::identity(F, m - 1);
  for (unsigned i = 0; i < m - 2; ++i) shorter = shorter * tg;
  CHECK_FALSE(shorter.is_identity());
}

TEST_CASE("projection to the sum-zero module") {
  FieldPtr F = Field::make(5, 1);
  const unsigned m = 4;

  // Constant vectors project to zero.
  for (scalar_t c = 0; c < 5; ++c) {
    Vector v(m, c);
    Vector w = natural_to_deleted(F, v);
    CHECK(w == Vector(m - 1, 0));
  }

  // Round trip: expand coordinates in the f-basis back to natural coordinates
  // (already sum-zero), then project again.
  auto expand = [&](const Vector& w) {
    Vector nat(m, 0);
    for (unsigned j = 0; j + 1 < m; ++j) {
      nat[j] = F->add(nat[j], w[j]);
      nat[j + 1] = F->sub(nat[j + 1], w[j]);
    }
    return nat;
  };
  for (unsigned code = 0; code < 125; ++code) {
    Vector w = {static_cast<scalar_t>(code % 5), static_cast<scalar_t>((code / 5) % 5),
                static_cast<scalar_t>(code / 25)};
    CHECK(natural_to_deleted(F, expand(w)) == w);
  }

  // Equivariance: projecting a permuted vector equals acting on the projection.
  std::vector<unsigned> p = {0, 1, 2, 3};
  do {
    Matrix P = perm_matrix(F, p);
    Matrix D = deleted_matrix(F, p);
    for (unsigned code = 0; code < 625; ++code) {
      Vector v = {static_cast<scalar_t>(code % 5), static_cast<scalar_t>((code / 5) % 5),
                  static_cast<scalar_t>((code / 25) % 5), static_cast<scalar_t>(code / 125)};
      CHECK(natural_to_deleted(F, P.apply(v)) == D.apply(natural_to_deleted(F, v)));
    }
  } while (std::next_permutation(p.begin(), p.end()));

  CHECK_THROWS_AS((void)natural_to_deleted(Field::make(2, 1), Vector(4, 1)), CoprimalityViolated);
}

TEST_CASE("tensor products of groups") {
  GroupSpec t;
  t.family = Family::Tensor;
  t.factors = {spec_of(Family::Diagonal, 2, 3), spec_of(Family::Diagonal, 2, 3)};
  MatrixGroup g = enumerated(t);
  CHECK(g.dim == 4);
  // 4 * 4 elementwise pairs, quotiented by the 2 shared scalars.
  CHECK(g.order() == 8);
  CHECK(g.label == "tensor(diagonal(n=2,q=3),diagonal(n=2,q=3))");

  GroupSpec big;
  big.family = Family::Tensor;
  GroupSpec zsym = spec_of(Family::SymNatural, 3, 7);
  zsym.with_scalars = true;
  big.factors = {zsym, spec_of(Family::Heisenberg, 3, 7)};
  MatrixGroup gb = enumerated(big);
  CHECK(gb.dim == 9);
  CHECK(gb.order() == 36 * 54 / 6);  // both factors share the 6 scalars
}

TEST_CASE("scalar augmentation") {
  GroupSpec zs = spec_of(Family::SymNatural, 3, 7);
  zs.with_scalars = true;
  MatrixGroup g = enumerated(zs);
  CHECK(g.order() == 36);
  CHECK(g.label == "Z*sym_natural(m=3,q=7)");

  // Bare permutation module groups contain no scalar but the identity.
  MatrixGroup bare = enumerated(spec_of(Family::DeletedPerm, 3, 7));
  unsigned scalars = 0;
  for (const Matrix& m : *bare.elements)
    if (m.is_scalar()) ++scalars;
  CHECK(scalars == 1);

  // The flag is a no-op when the family already contains the scalars.
  GroupSpec h = spec_of(Family::Heisenberg, 3, 7);
  h.with_scalars = true;
  MatrixGroup hg = enumerated(h);
  CHECK(hg.order() == 54);
  CHECK(hg.label == "heisenberg(r=3,q=7)");
}

TEST_CASE("construction preconditions") {
  CHECK_THROWS_AS((void)build(spec_of(Family::SymNatural, 3, 3)), CoprimalityViolated);
  CHECK_THROWS_AS((void)build(spec_of(Family::AltNatural, 5, 5)), CoprimalityViolated);
  CHECK_THROWS_AS((void)build(spec_of(Family::DiagonalWreath, 5, 5)), CoprimalityViolated);
  CHECK_THROWS_AS((void)build(spec_of(Family::Heisenberg, 4, 5)), BadParameters);  // r not prime
  CHECK_THROWS_AS((void)build(spec_of(Family::Heisenberg, 3, 5)), BadParameters);  // r ∤ q-1
  CHECK_THROWS_AS((void)build(spec_of(Family::DeletedPerm, 1, 7)), BadParameters);
  CHECK_THROWS_AS((void)build(spec_of(Family::Scalars, 0, 5)), BadParameters);

  GroupSpec t;
  t.family = Family::Tensor;
  t.factors = {spec_of(Family::Diagonal, 2, 3)};
  CHECK_THROWS_AS((void)build(t), BadParameters);
  t.factors = {spec_of(Family::Diagonal, 2, 3), spec_of(Family::Diagonal, 2, 5)};
  CHECK_THROWS_AS((void)build(t), FieldMismatch);
}
