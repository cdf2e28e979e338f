#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "cpbase/errors.hpp"

namespace cpb {

/// A field element. Values live in [0, q) and encode the coefficient vector
/// of the element over the prime field in base p, least significant digit
/// first: value = sum_i c_i * p^i with 0 <= c_i < p. For prime fields this
/// is just the residue itself.
using scalar_t = std::uint32_t;

/// GF(p^e) with full exp/log tables.
///
/// Construction canonicalises everything so that two fields built from the
/// same (p, e) are element-for-element identical:
///  * the modulus for e > 1 is the least monic irreducible polynomial of
///    degree e, "least" meaning smallest encoded value of its non-leading
///    coefficient vector (so GF(8) always uses x^3 + x + 1);
///  * the multiplicative generator used for the tables is the element with
///    the least encoded value among generators of the unit group.
///
/// All arithmetic after construction is table-driven and O(1).
class Field {
 public:
  static constexpr std::uint64_t kDefaultCap = 1ull << 20;

  /// Builds GF(p^e). Throws NonPrimeCharacteristic if p is not prime,
  /// DegreeOutOfRange if e < 1, FieldTooLarge if p^e exceeds cap.
  static std::shared_ptr<const Field> make(std::uint64_t p, unsigned e,
                                           std::uint64_t cap = kDefaultCap);

  std::uint64_t characteristic() const { return p_; }
  unsigned degree() const { return e_; }
  std::uint64_t order() const { return q_; }

  /// Coefficients of the defining polynomial, ascending degree, monic;
  /// empty for prime fields (degree 1).
  const std::vector<scalar_t>& modulus() const { return modulus_; }

  /// Least-valued generator of the multiplicative group.
  scalar_t generator() const { return generator_; }

  bool is_element(std::uint64_t v) const { return v < q_; }

  /// Validates and narrows an integer to an element value.
  scalar_t element(std::uint64_t v) const {
    if (!is_element(v)) throw OutOfRange("value " + std::to_string(v) + " not in field of order " + std::to_string(q_));
    return static_cast<scalar_t>(v);
  }

  scalar_t zero() const { return 0; }
  scalar_t one() const { return 1; }

  scalar_t add(scalar_t a, scalar_t b) const {
    if (e_ == 1) {
      std::uint64_t s = std::uint64_t(a) + b;
      if (s >= q_) s -= q_;
      return static_cast<scalar_t>(s);
    }
    return add_ext(a, b);
  }

  scalar_t neg(scalar_t a) const {
    if (e_ == 1) return a == 0 ? 0 : static_cast<scalar_t>(q_ - a);
    return neg_ext(a);
  }

  scalar_t sub(scalar_t a, scalar_t b) const { return add(a, neg(b)); }

  scalar_t mul(scalar_t a, scalar_t b) const {
    if (a == 0 || b == 0) return 0;
    std::uint64_t k = std::uint64_t(log_[a]) + log_[b];
    if (k >= q_ - 1) k -= q_ - 1;
    return exp_[k];
  }

  /// Multiplicative inverse; throws BadParameters for a = 0.
  scalar_t inv(scalar_t a) const {
    if (a == 0) throw BadParameters("inverse of zero");
    std::uint64_t k = log_[a];
    return exp_[k == 0 ? 0 : q_ - 1 - k];
  }

  scalar_t div(scalar_t a, scalar_t b) const { return mul(a, inv(b)); }

  scalar_t pow(scalar_t a, std::uint64_t k) const {
    if (a == 0) return k == 0 ? 1 : 0;
    std::uint64_t e = (std::uint64_t(log_[a]) * (k % (q_ - 1))) % (q_ - 1);
    return exp_[e];
  }

  /// Order of a in the unit group; throws BadParameters for a = 0.
  std::uint64_t multiplicative_order(scalar_t a) const;

  /// Base-p digits of an element value (ascending), always e entries.
  std::vector<scalar_t> digits(scalar_t a) const;

  /// True when the two fields have the same characteristic and degree
  /// (construction is canonical, so this means identical arithmetic).
  bool same_as(const Field& other) const { return p_ == other.p_ && e_ == other.e_; }

 private:
  Field() = default;

  scalar_t add_ext(scalar_t a, scalar_t b) const;
  scalar_t neg_ext(scalar_t a) const;

  std::uint64_t p_ = 0;
  unsigned e_ = 0;
  std::uint64_t q_ = 0;
  scalar_t generator_ = 0;
  std::vector<scalar_t> modulus_;  // ascending coefficients, size e+1 (empty for e = 1)
  std::vector<scalar_t> exp_;      // exp_[k] = g^k, k in [0, q-1)
  std::vector<scalar_t> log_;      // log_[a] for a in [1, q); log_[0] unused
};

using FieldPtr = std::shared_ptr<const Field>;

}  // namespace cpb
