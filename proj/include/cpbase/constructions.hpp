#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cpbase/group.hpp"

namespace cpb {

enum class Family {
  Scalars,
  Diagonal,
  DiagonalWreath,
  SymNatural,
  AltNatural,
  DeletedPerm,
  Heisenberg,
  Tensor,
};

std::string family_name(Family f);
Family family_from_name(const std::string& name);  // throws ConfigError

/// Parameters for one group construction; tensor nests two child specs.
struct GroupSpec {
  Family family = Family::Scalars;
  unsigned size = 0;     // n (scalars/diagonal/wreath), m (sym/alt/deleted), r (heisenberg)
  std::uint64_t p = 0;   // field characteristic
  unsigned e = 1;        // field extension degree
  std::optional<bool> with_scalars;  // override the family default
  std::vector<GroupSpec> factors;    // tensor only, exactly two

  std::string label() const;
};

/// Whether the built group already contains every scalar matrix: the scalar /
/// diagonal families (and the wreath product over them) contain them
/// automatically, and the extraspecial construction lists the scalar
/// generator explicitly. The permutation-module families and tensor products
/// are built bare so their base counts match the exact product formulas;
/// GroupSpec::with_scalars = true appends the scalar generator to those.
bool family_includes_scalars(Family f);

/// Builds the family instance as a MatrixGroup (generators only; call
/// enumerate() for exact queries). Throws CoprimalityViolated or
/// BadParameters when the family preconditions fail.
MatrixGroup build(const GroupSpec& spec, std::uint64_t field_cap = Field::kDefaultCap);

/// Permutation matrix of the permutation given by 0-based images.
Matrix perm_matrix(const FieldPtr& field, const std::vector<unsigned>& images);

/// Image of the permutation on the sum-zero submodule of the natural
/// permutation module, written in the basis f_i = e_i - e_{i+1}.
Matrix deleted_matrix(const FieldPtr& field, const std::vector<unsigned>& images);

/// Projection of a length-m vector onto the sum-zero submodule, expressed in
/// the f_i basis (length m-1). Requires p not dividing m (CoprimalityViolated)
/// so that the trivial summand splits off.
Vector natural_to_deleted(const FieldPtr& field, const Vector& v);

}  // namespace cpb
