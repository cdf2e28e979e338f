#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cpbase/matrix.hpp"
#include "cpbase/rng.hpp"

namespace cpb {

/// Which fixed-space notion a support statistic refers to:
/// Fixed   — codim of the eigenspace for eigenvalue 1,
/// Projective — codim of the largest eigenspace over all nonzero eigenvalues
///              (zero exactly on scalar matrices).
enum class SupportKind { Fixed, Projective };

struct SupportSpectrum {
  SupportKind kind = SupportKind::Fixed;
  std::map<unsigned, std::uint64_t> counts;  // support value -> element count
  std::uint64_t total = 0;                   // sum of counts
};

/// A matrix group given by generators, with an optional full enumeration.
/// Enumeration (see enumerate()) freezes the element list in a deterministic
/// breadth-first order and precomputes per-element supports; after that the
/// structure is treated as immutable and all queries are safe to run from
/// multiple threads.
struct MatrixGroup {
  FieldPtr field;
  unsigned dim = 0;
  std::vector<Matrix> generators;
  std::string label;

  std::optional<std::vector<Matrix>> elements;  // breadth-first closure
  std::vector<unsigned> supports;               // codim of fix space, per element
  std::vector<std::uint32_t> check_order;       // non-identity indices, support ascending

  bool enumerated() const { return elements.has_value(); }
  std::uint64_t order() const;  // throws NotEnumerated
};

/// Builds the group structure and validates that the generators are square,
/// invertible and live over the given field.
MatrixGroup make_group(FieldPtr field, unsigned dim, std::vector<Matrix> generators,
                       std::string label);

constexpr std::uint64_t kDefaultEnumCap = 2'000'000;

/// Breadth-first closure of the generators under multiplication. Element 0 is
/// the identity; the rest appear in first-discovery order (queue order, each
/// popped element multiplied on the right by the generators in listed order).
/// Throws CapExceeded when the group has more than cap elements.
void enumerate(MatrixGroup& g, std::uint64_t cap = kDefaultEnumCap);

/// True iff the field characteristic does not divide |G|.
bool coprime_check(const MatrixGroup& g);

/// Uniform over the enumeration when present; otherwise one step of a
/// product-replacement walk (heuristic only — never used for exact counts).
Matrix random_element(const MatrixGroup& g, SplitMix64& rng);

/// Product-replacement walk over generator slots. Heuristically uniform;
/// exact results always come from the enumeration instead.
class ProductReplacement {
 public:
  static constexpr unsigned kSlots = 10;
  static constexpr unsigned kBurnInPerGenerator = 50;

  ProductReplacement(const MatrixGroup& g, std::uint64_t seed);

  Matrix next();

 private:
  void step();

  std::vector<Matrix> slots_;
  SplitMix64 rng_;
};

/// True iff no non-identity element fixes every vector of the tuple.
/// Elements are scanned in ascending support order so that likely fixers
/// (low support) reject non-bases early. Throws NotEnumerated.
bool is_base(const MatrixGroup& g, const std::vector<Vector>& tuple);

/// Histogram of supports over all elements (identity contributes 0 to the
/// Fixed spectrum; the Projective spectrum skips scalar elements entirely).
SupportSpectrum support_spectrum(const MatrixGroup& g, SupportKind kind = SupportKind::Fixed);

/// Least support among non-identity elements; empty for the trivial group.
std::optional<unsigned> min_supp(const MatrixGroup& g);

/// Least projective support among non-scalar elements; empty when every
/// element is scalar. Throws NotEnumerated.
std::optional<unsigned> min_supp_projective(const MatrixGroup& g);

/// g^{-1} h^{-1} g h.
Matrix commutator(const Matrix& g, const Matrix& h);

}  // namespace cpb
