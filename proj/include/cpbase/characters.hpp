#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "cpbase/partition.hpp"

namespace cpb {

/// Degree of the irreducible character indexed by lambda (hook length formula).
Int hook_degree(const Partition& lambda);

/// Irreducible symmetric-group character value chi^lambda(rho) via recursive
/// rim hook removal. Both partitions must have the same order
/// (OrderMismatch otherwise). One evaluator caches intermediate results for
/// a fixed class rho, so reuse it when sweeping lambda.
class CharacterEvaluator {
 public:
  explicit CharacterEvaluator(Partition rho);

  Int value(const Partition& lambda);

 private:
  Int eval(const std::vector<unsigned>& parts, std::size_t k);

  Partition rho_;
  std::size_t ones_suffix_start_;  // least k with rho_[k..] all equal to 1
  std::unordered_map<std::string, Int> memo_;
};

Int character_value(const Partition& lambda, const Partition& rho);

/// Full character table of Sym(m): rows indexed by partitions(m) (characters),
/// columns indexed by partitions(m) (classes), both in the partitions() order.
struct CharTable {
  unsigned m = 0;
  std::vector<Partition> index;           // shared row/column labels
  std::vector<std::vector<Int>> values;   // values[char][class]
  std::vector<Int> sizes;                 // class sizes, same column order
};

CharTable char_table(unsigned m);

/// Largest |chi(g)| / chi(1) over non-linear irreducible characters chi and
/// classes outside the centre of chi (classes with |chi(g)| < chi(1)).
/// Throws OutOfRange unless 2 <= m <= 12 (table stays exactly computable).
Rational mr_via_table(unsigned m);

/// |chi^lambda(rho)| / chi^lambda(1), or empty when the ratio is excluded
/// from the maximum: linear characters, and classes where |chi| equals the
/// degree (the class acts as a scalar for this character).
std::optional<Rational> ratio_at(const Partition& lambda, const Partition& rho);

/// One verified row of the low-depth character data: the character indexed
/// by a partition whose parts below the first row sum to at most 3, its
/// degree, and its value on the class of a single 3-cycle.
struct ShallowCharacterRow {
  Partition lambda;
  Int degree;          // chi(1), from the hook length formula
  Int three_cycle;     // chi on cycle type (3, 1^{m-3})
  Int degree_closed;   // closed-form polynomial evaluation
  Int three_cycle_closed;
};

/// The seven closed-form rows for Sym(m), m >= 15: partitions
/// (m), (m-1,1), (m-2,2), (m-2,1,1), (m-3,3), (m-3,2,1), (m-3,1,1,1).
/// Each row carries both the recursively computed values and the closed
/// forms, which must agree. Throws OutOfRange for m < 15.
std::vector<ShallowCharacterRow> shallow_character_rows(unsigned m);

/// Exhaustive check of the 3-cycle character gap: for every lambda other
/// than (m) and (1^m), chi(1) - chi(3-cycle) >= chi(1) / (m-1).
struct ThreeCycleGapReport {
  unsigned m = 0;
  std::uint64_t checked = 0;
  std::vector<Partition> violations;
  Rational min_slack;       // min over checked lambda of (gap - chi(1)/(m-1))
  Partition min_slack_at;
};

ThreeCycleGapReport verify_three_cycle_gap(unsigned m);  // 3 <= m <= 22

}  // namespace cpb
