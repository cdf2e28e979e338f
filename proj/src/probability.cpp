#include "cpbase/probability.hpp"

#include <algorithm>
#include <cmath>

#include "cpbase/matrix.hpp"
#include "cpbase/parallel.hpp"
#include "cpbase/rng.hpp"

namespace cpb {

namespace {

// One worker's share of the tuple sweep. A node at depth `level` covers the
// tuple-index interval [base, base + |V|^(c-level)); only the part meeting
// [lo, hi) is counted, which is what makes the sweep partitionable.
class TupleSweep {
 public:
  TupleSweep(const MatrixGroup& g, unsigned c, std::uint64_t lo, std::uint64_t hi)
      : g_(g), c_(c), lo_(lo), hi_(hi), dim_(g.dim), q_(g.field->order()) {
    vol_ = 1;
    for (unsigned i = 0; i < dim_; ++i) vol_ *= q_;
    subtree_.resize(c + 1);
    subtree_[c] = 1;
    for (unsigned l = c; l-- > 0;) subtree_[l] = subtree_[l + 1] * vol_;
    coord_pow_.resize(dim_);
    std::uint64_t p = 1;
    for (unsigned i = dim_; i-- > 0;) {
      coord_pow_[i] = p;
      p *= q_;
    }
  }

  std::uint64_t count_bases() {
    const auto& order = g_.check_order;
    std::vector<std::uint32_t> survivors(order.begin(), order.end());
    return count(0, 0, survivors);
  }

 private:
  std::uint64_t count(unsigned level, std::uint64_t node_base,
                      const std::vector<std::uint32_t>& survivors) {
    const std::uint64_t node_end = node_base + subtree_[level];
    const std::uint64_t span_lo = std::max(lo_, node_base);
    const std::uint64_t span_hi = std::min(hi_, node_end);
    if (span_lo >= span_hi) return 0;
    // No element left that fixes the prefix: every completion is a base.
    if (survivors.empty()) return span_hi - span_lo;
    // Full tuple chosen and its stabilizer is still non-trivial.
    if (level == c_) return 0;

    const std::uint64_t child = subtree_[level + 1];
    const std::uint64_t vi_lo = (span_lo - node_base) / child;
    const std::uint64_t vi_hi = (span_hi - node_base + child - 1) / child;
    Vector v(dim_);
    std::vector<std::uint32_t> next;
    next.reserve(survivors.size());
    std::uint64_t total = 0;
    const auto& elems = *g_.elements;
    for (std::uint64_t vi = vi_lo; vi < vi_hi; ++vi) {
      for (unsigned i = 0; i < dim_; ++i)
        v[i] = static_cast<scalar_t>((vi / coord_pow_[i]) % q_);
      next.clear();
      for (std::uint32_t idx : survivors)
        if (elems[idx].fixes(v)) next.push_back(idx);
      total += count(level + 1, node_base + vi * child, next);
    }
    return total;
  }

  const MatrixGroup& g_;
  unsigned c_;
  std::uint64_t lo_, hi_;
  unsigned dim_;
  std::uint64_t q_;
  std::uint64_t vol_ = 0;
  std::vector<std::uint64_t> subtree_;    // subtree_[l] = |V|^(c-l)
  std::vector<std::uint64_t> coord_pow_;  // q^(dim-1-i): coordinate 0 most significant
};

}  // namespace

PbEstimate pb_bruteforce(const MatrixGroup& g, unsigned c, std::uint64_t tuple_cap,
                         unsigned workers) {
  if (!g.enumerated()) throw NotEnumerated("exact base probability requires enumeration");
  if (c < 1) throw BadParameters("tuple length must be at least 1");
  const Int volV = int_pow(Int(g.field->order()), g.dim);
  const Int space = int_pow(volV, c);
  if (space > tuple_cap)
    throw TupleSpaceTooLarge("tuple space " + space.str() + " exceeds cap " +
                             std::to_string(tuple_cap));
  const std::uint64_t total = space.convert_to<std::uint64_t>();

  workers = std::max(1u, workers);
  std::vector<std::uint64_t> per_worker(workers, 0);
  run_partitioned(0, total, workers, [&](unsigned w, std::uint64_t lo, std::uint64_t hi) {
    TupleSweep sweep(g, c, lo, hi);
    per_worker[w] = sweep.count_bases();
  });
  Int bases = 0;
  for (std::uint64_t n : per_worker) bases += n;

  PbEstimate est;
  est.method = PbEstimate::Method::Bruteforce;
  est.value = Rational(bases, space);
  est.value_float = rational_to_double(est.value);
  return est;
}

Rational pb_formula_diagonal(unsigned n, std::uint64_t q, unsigned c) {
  if (n < 1 || q < 2 || c < 1) throw BadParameters("diagonal formula needs n, c >= 1 and q >= 2");
  const Int qc = int_pow(Int(q), c);
  Rational factor = Rational(qc - 1, qc);
  Rational out = 1;
  for (unsigned i = 0; i < n; ++i) out *= factor;
  return out;
}

Rational pb_formula_sym(unsigned m, std::uint64_t q, unsigned c) {
  if (m < 1 || q < 2 || c < 1) throw BadParameters("product formula needs m, c >= 1 and q >= 2");
  const Int qc = int_pow(Int(q), c);
  if (qc < m) throw BadParameters("product formula needs q^c >= m");
  Rational out = 1;
  for (unsigned i = 0; i < m; ++i) out *= Rational(qc - i, qc);
  return out;
}

WilsonInterval wilson95(std::uint64_t successes, std::uint64_t trials) {
  // z for a central 95% normal interval.
  const double z = 1.959963984540054;
  const double n = static_cast<double>(trials);
  const double phat = static_cast<double>(successes) / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double centre = (phat + z2 / (2.0 * n)) / denom;
  const double half = z * std::sqrt(phat * (1.0 - phat) / n + z2 / (4.0 * n * n)) / denom;
  WilsonInterval w;
  w.lo = std::max(0.0, centre - half);
  w.hi = std::min(1.0, centre + half);
  return w;
}

PbEstimate pb_monte_carlo(const MatrixGroup& g, unsigned c, std::uint64_t trials,
                          std::uint64_t seed, unsigned workers, const TupleSource* tuple_source) {
  if (!g.enumerated()) throw NotEnumerated("base sampling requires enumeration");
  if (trials < 100) throw BadParameters("need at least 100 trials");
  if (c < 1) throw BadParameters("tuple length must be at least 1");
  const std::uint64_t q = g.field->order();
  const unsigned dim = g.dim;

  workers = std::max(1u, workers);
  std::vector<std::uint64_t> per_worker(workers, 0);
  run_partitioned(0, trials, workers, [&](unsigned w, std::uint64_t lo, std::uint64_t hi) {
    std::vector<Vector> tuple(c, Vector(dim, 0));
    std::uint64_t hits = 0;
    for (std::uint64_t t = lo; t < hi; ++t) {
      if (tuple_source) {
        (*tuple_source)(t, tuple);
      } else {
        SplitMix64 rng = trial_rng(seed, t);
        for (Vector& v : tuple)
          for (unsigned i = 0; i < dim; ++i) v[i] = static_cast<scalar_t>(rng.below(q));
      }
      if (is_base(g, tuple)) ++hits;
    }
    per_worker[w] = hits;
  });
  std::uint64_t successes = 0;
  for (std::uint64_t h : per_worker) successes += h;

  PbEstimate est;
  est.method = PbEstimate::Method::MonteCarlo;
  est.value = Rational(successes, trials);
  est.value_float = static_cast<double>(successes) / static_cast<double>(trials);
  WilsonInterval w = wilson95(successes, trials);
  est.ci_lo = w.lo;
  est.ci_hi = w.hi;
  est.trials = trials;
  est.seed = seed;
  return est;
}

Rational union_bound(const SupportSpectrum& spectrum, std::uint64_t q, unsigned c) {
  Rational sum = 0;
  for (auto [supp, count] : spectrum.counts) {
    if (supp == 0) continue;  // identity does not obstruct a base
    sum += Rational(Int(count), int_pow(Int(q), std::uint64_t(c) * supp));
  }
  return 1 - sum;
}

Rational minsupp_bound(std::uint64_t order, unsigned minsupp, std::uint64_t q, unsigned c) {
  return 1 - Rational(Int(order), int_pow(Int(q), std::uint64_t(c) * minsupp));
}

double mr_bound(std::uint64_t q, unsigned n, const Rational& mr, unsigned c) {
  if (mr < 0 || mr >= 1) throw BadParameters("ratio must lie in [0, 1)");
  const double mrd = rational_to_double(mr);
  const double expo = (c * (1.0 - mrd) / 2.0 - 2.0) * n;  // |V|^x = q^(n x)
  return 1.0 - 1.0 / std::pow(static_cast<double>(q), expo);
}

Rational min_c(const Rational& mr, const Rational& eps) {
  if (mr < 0 || mr >= 1) throw BadParameters("ratio must lie in [0, 1)");
  if (eps < 0) throw BadParameters("epsilon must be non-negative");
  return (4 + 2 * eps) / (1 - mr);
}

BoundCaseValue bound_case(BoundCase which, const BoundCaseParams& p) {
  const double q = static_cast<double>(p.q);
  const double c = static_cast<double>(p.c);
  double value = 0.0;
  switch (which) {
    case BoundCase::Case1:
      value = 1.0 - 3.0 / std::pow(q, (c / 2.0 - 5.0) * std::sqrt(static_cast<double>(p.n)));
      break;
    case BoundCase::Case2a: {
      const double sd = std::sqrt(static_cast<double>(p.dimV));
      const double t1 = 1.0 / std::pow(q, (c - 4.0) * sd);
      const double t2 = 2.0 / std::pow(q, p.dimV * (c - 10.0) / 80.0);  // |V| = q^dimV
      value = 1.0 - (t1 + t2);
      break;
    }
    case BoundCase::Case2b:
      value = 1.0 - 3.0 / std::pow(q, (c - 10.0) / 16.0 * std::sqrt(static_cast<double>(p.dimV)));
      break;
    case BoundCase::Case2c:
      value = 1.0 - 3.0 / std::pow(static_cast<double>(p.n), c - 2.0);
      break;
  }
  BoundCaseValue out;
  out.which = which;
  out.value = value;
  out.vacuous = !(value > 0.0);
  out.in_regime = p.c >= 11;
  return out;
}

TensorSupportReport verify_tensor_lemma(const MatrixGroup& g1, const MatrixGroup& g2,
                                        std::uint64_t cap) {
  const MatrixGroup* factors[2] = {&g1, &g2};
  for (const MatrixGroup* f : factors) {
    if (!f->enumerated()) throw NotEnumerated("tensor factors must be enumerated");
    // Both factors must contain the scalar group.
    const Matrix zgen = Matrix::scalar(f->field, f->dim, f->field->generator());
    bool has = false;
    for (const Matrix& m : *f->elements)
      if (m == zgen) {
        has = true;
        break;
      }
    if (!has && f->field->order() > 2)
      throw BadParameters("tensor factor " + f->label + " does not contain the scalars");
  }
  if (!g1.field->same_as(*g2.field)) throw FieldMismatch("tensor factors over different fields");

  std::vector<Matrix> gens;
  Matrix i1 = Matrix::identity(g1.field, g1.dim), i2 = Matrix::identity(g2.field, g2.dim);
  for (const Matrix& g : g1.generators) gens.push_back(kronecker(g, i2));
  for (const Matrix& h : g2.generators) gens.push_back(kronecker(i1, h));
  MatrixGroup prod = make_group(g1.field, g1.dim * g2.dim,
                                std::move(gens), "tensor(" + g1.label + "," + g2.label + ")");
  enumerate(prod, cap);

  TensorSupportReport rep;
  rep.dim = prod.dim;
  rep.factor_min[0] = min_supp_projective(g1);
  rep.factor_min[1] = min_supp_projective(g2);
  rep.product_min = min_supp_projective(prod);

  std::optional<unsigned> predicted;
  for (int i = 0; i < 2; ++i) {
    if (!rep.factor_min[i]) continue;  // factor inside the scalars contributes no branch
    unsigned scaled = *rep.factor_min[i] * (rep.dim / factors[i]->dim);
    if (!predicted || scaled < *predicted) predicted = scaled;
  }
  rep.predicted = predicted;

  if (!rep.product_min) {
    // Every product element is scalar: nothing to bound, statement holds.
    rep.half_dim_branch = true;
    rep.holds = true;
    return rep;
  }
  rep.min_formula_branch = predicted && *rep.product_min == *predicted;
  rep.half_dim_branch = 2 * *rep.product_min >= rep.dim;
  rep.holds = rep.min_formula_branch || rep.half_dim_branch;
  return rep;
}

}  // namespace cpb
