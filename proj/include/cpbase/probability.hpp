#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "cpbase/group.hpp"
#include "cpbase/numeric.hpp"

namespace cpb {

/// Probability that a uniform random c-tuple of vectors is a base, plus how
/// it was obtained. Exact methods fill `value`; Monte Carlo fills the float
/// estimate and its 95% Wilson interval as well.
struct PbEstimate {
  enum class Method { Bruteforce, Formula, MonteCarlo };

  Method method = Method::Bruteforce;
  Rational value;  // exact for bruteforce/formula; successes/trials for MC
  double value_float = 0.0;
  double ci_lo = 0.0, ci_hi = 0.0;  // Monte Carlo only
  std::uint64_t trials = 0;         // Monte Carlo only
  std::uint64_t seed = 0;           // Monte Carlo only
};

constexpr std::uint64_t kDefaultTupleCap = 100'000'000;

/// Exact base probability by sweeping all |V|^c tuples in odometer order
/// (vector index = base-q digits of coordinates, first coordinate most
/// significant; tuple index = base-|V| digits, first vector most
/// significant). A prefix-stabilizer recursion prunes the sweep: once no
/// non-identity element fixes the chosen prefix, the whole subtree counts as
/// bases without being visited. Workers partition the tuple-index range, so
/// the count is independent of the worker count. Throws TupleSpaceTooLarge
/// when |V|^c > tuple_cap, NotEnumerated without an enumeration.
PbEstimate pb_bruteforce(const MatrixGroup& g, unsigned c,
                         std::uint64_t tuple_cap = kDefaultTupleCap, unsigned workers = 1);

/// (1 - q^{-c})^n: the full diagonal group's base probability.
Rational pb_formula_diagonal(unsigned n, std::uint64_t q, unsigned c);

/// prod_{i=0}^{m-1} (q^c - i) / q^c: the natural symmetric-group action.
/// Throws BadParameters when q^c < m (a factor would go non-positive).
Rational pb_formula_sym(unsigned m, std::uint64_t q, unsigned c);

/// Replaces the tuple sampler in pb_monte_carlo (tests only): writes the
/// tuple for the given trial index into `out` (c vectors of length dim).
using TupleSource = std::function<void(std::uint64_t trial, std::vector<Vector>& out)>;

/// Samples `trials` uniform c-tuples and counts bases. Each trial derives
/// its RNG stream from (seed, trial index) alone, so the estimate is
/// bit-identical for every worker count. Throws NotEnumerated /
/// BadParameters (trials < 100).
PbEstimate pb_monte_carlo(const MatrixGroup& g, unsigned c, std::uint64_t trials,
                          std::uint64_t seed, unsigned workers = 1,
                          const TupleSource* tuple_source = nullptr);

/// 95% Wilson score interval for successes/trials.
struct WilsonInterval {
  double lo = 0.0, hi = 0.0;
};
WilsonInterval wilson95(std::uint64_t successes, std::uint64_t trials);

/// 1 - sum_{s > 0} count_s * q^{-c s} over the spectrum (identity excluded):
/// a lower bound for the exact base probability.
Rational union_bound(const SupportSpectrum& spectrum, std::uint64_t q, unsigned c);

/// 1 - |G| * q^{-c * minsupp}; weaker than union_bound, possibly negative.
Rational minsupp_bound(std::uint64_t order, unsigned minsupp, std::uint64_t q, unsigned c);

/// 1 - |V|^{-(c(1-mr)/2 - 2)} with |V| = q^n, as a float (real exponent).
/// Throws BadParameters unless 0 <= mr < 1.
double mr_bound(std::uint64_t q, unsigned n, const Rational& mr, unsigned c);

/// (4 + 2*eps) / (1 - mr): the least c the headline bound asks for.
/// Throws BadParameters unless 0 <= mr < 1 and eps >= 0.
Rational min_c(const Rational& mr, const Rational& eps);

/// The four closed-form lower-bound expressions for large coprime groups.
enum class BoundCase { Case1, Case2a, Case2b, Case2c };

struct BoundCaseParams {
  std::uint64_t q = 0;  // field size
  unsigned n = 0;       // permutation degree / case-specific n
  unsigned dimV = 0;    // dim of the module (cases 2a, 2b)
  unsigned c = 0;       // tuple length
};

struct BoundCaseValue {
  BoundCase which = BoundCase::Case1;
  double value = 0.0;
  bool vacuous = false;    // value <= 0: true but useless at this scale
  bool in_regime = false;  // c >= 11, where the statement lives
};

BoundCaseValue bound_case(BoundCase which, const BoundCaseParams& params);

/// Support statements for a tensor product of two groups that both contain
/// the scalars: either the product's minimal projective support equals
/// min_i factor_min_i * dim(V)/dim(V_i), or it is at least dim(V)/2.
struct TensorSupportReport {
  unsigned dim = 0;
  std::optional<unsigned> factor_min[2];   // projective MinSupp of each factor
  std::optional<unsigned> predicted;       // the min-formula value, when defined
  std::optional<unsigned> product_min;     // projective MinSupp of the product
  bool min_formula_branch = false;
  bool half_dim_branch = false;
  bool holds = false;
};

TensorSupportReport verify_tensor_lemma(const MatrixGroup& g1, const MatrixGroup& g2,
                                        std::uint64_t cap = kDefaultEnumCap);

}  // namespace cpb
