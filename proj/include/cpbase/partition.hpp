#pragma once

#include <string>
#include <vector>

#include "cpbase/errors.hpp"
#include "cpbase/numeric.hpp"

namespace cpb {

/// Integer partition: weakly decreasing positive parts.
struct Partition {
  std::vector<unsigned> parts;

  Partition() = default;
  explicit Partition(std::vector<unsigned> p) : parts(std::move(p)) {}
  Partition(std::initializer_list<unsigned> p) : parts(p) {}

  unsigned order() const {
    unsigned s = 0;
    for (unsigned p : parts) s += p;
    return s;
  }
  std::size_t length() const { return parts.size(); }
  bool operator==(const Partition& o) const { return parts == o.parts; }
  bool operator!=(const Partition& o) const { return parts != o.parts; }

  /// "(5,2,1)" / "()" rendering.
  std::string to_string() const;
};

/// All partitions of m, first part largest first ((m) before (m-1,1) ...,
/// ending at (1^m)). Throws OutOfRange unless 1 <= m <= 40.
std::vector<Partition> partitions(unsigned m);

/// Conjugate (transpose of the Young diagram).
Partition dual(const Partition& p);

/// Number of permutations with the given cycle type inside Sym(order).
Int class_size(const Partition& cycle_type);

/// Parity of a permutation with the given cycle type: +1 or -1.
int cycle_type_sign(const Partition& cycle_type);

}  // namespace cpb
