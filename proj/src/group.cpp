#include "cpbase/group.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

namespace cpb {

std::uint64_t MatrixGroup::order() const {
  if (!elements) throw NotEnumerated("group order requires enumeration");
  return elements->size();
}

MatrixGroup make_group(FieldPtr field, unsigned dim, std::vector<Matrix> generators,
                       std::string label) {
  for (const Matrix& g : generators) {
    if (g.dim() != dim) throw BadParameters("generator dimension mismatch in " + label);
    if (!g.field()->same_as(*field)) throw FieldMismatch("generator field mismatch in " + label);
    (void)g.inverse();  // throws SingularMatrix when not invertible
  }
  MatrixGroup g;
  g.field = std::move(field);
  g.dim = dim;
  g.generators = std::move(generators);
  g.label = std::move(label);
  return g;
}

void enumerate(MatrixGroup& g, std::uint64_t cap) {
  if (cap < 1) throw BadParameters("enumeration cap must be positive");
  std::vector<Matrix> elems;
  std::unordered_map<std::string, std::uint32_t> seen;
  std::deque<std::uint32_t> queue;

  Matrix id = Matrix::identity(g.field, g.dim);
  elems.push_back(id);
  seen.emplace(id.key(), 0);
  queue.push_back(0);

  while (!queue.empty()) {
    std::uint32_t idx = queue.front();
    queue.pop_front();
    for (const Matrix& gen : g.generators) {
      Matrix next = elems[idx] * gen;
      std::string key = next.key();
      if (seen.find(key) != seen.end()) continue;
      if (elems.size() >= cap)
        throw CapExceeded("group " + g.label + " exceeds enumeration cap " + std::to_string(cap));
      std::uint32_t ni = static_cast<std::uint32_t>(elems.size());
      elems.push_back(std::move(next));
      seen.emplace(std::move(key), ni);
      queue.push_back(ni);
    }
  }

  // Per-element supports and the ascending-support scan order used by
  // is_base; computing them once here keeps all later queries read-only.
  std::vector<unsigned> supports(elems.size());
  for (std::size_t i = 0; i < elems.size(); ++i) supports[i] = support(elems[i]);
  std::vector<std::uint32_t> order;
  order.reserve(elems.size() - 1);
  for (std::uint32_t i = 1; i < elems.size(); ++i) order.push_back(i);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::uint32_t a, std::uint32_t b) { return supports[a] < supports[b]; });

  g.elements = std::move(elems);
  g.supports = std::move(supports);
  g.check_order = std::move(order);
}

bool coprime_check(const MatrixGroup& g) {
  if (!g.enumerated()) throw NotEnumerated("coprimality check requires enumeration");
  return g.order() % g.field->characteristic() != 0;
}

Matrix random_element(const MatrixGroup& g, SplitMix64& rng) {
  if (g.enumerated()) {
    const auto& elems = *g.elements;
    return elems[rng.below(elems.size())];
  }
  ProductReplacement walk(g, rng.next());
  return walk.next();
}

ProductReplacement::ProductReplacement(const MatrixGroup& g, std::uint64_t seed) : rng_(seed) {
  if (g.generators.empty()) {
    slots_.assign(kSlots, Matrix::identity(g.field, g.dim));
  } else {
    slots_.reserve(kSlots);
    for (unsigned i = 0; i < kSlots; ++i) slots_.push_back(g.generators[i % g.generators.size()]);
  }
  const std::size_t burn = kBurnInPerGenerator * std::max<std::size_t>(1, g.generators.size());
  for (std::size_t i = 0; i < burn; ++i) step();
}

void ProductReplacement::step() {
  // Replace slot a by slot_a * slot_b for distinct random slots.
  std::size_t a = rng_.below(kSlots);
  std::size_t b = rng_.below(kSlots - 1);
  if (b >= a) ++b;
  slots_[a] = slots_[a] * slots_[b];
}

Matrix ProductReplacement::next() {
  step();
  return slots_[rng_.below(kSlots)];
}

bool is_base(const MatrixGroup& g, const std::vector<Vector>& tuple) {
  if (!g.enumerated()) throw NotEnumerated("base test requires enumeration");
  const auto& elems = *g.elements;
  for (std::uint32_t idx : g.check_order) {
    const Matrix& m = elems[idx];
    bool fixes_all = true;
    for (const Vector& v : tuple) {
      if (!m.fixes(v)) {
        fixes_all = false;
        break;
      }
    }
    if (fixes_all) return false;
  }
  return true;
}

SupportSpectrum support_spectrum(const MatrixGroup& g, SupportKind kind) {
  if (!g.enumerated()) throw NotEnumerated("spectrum requires enumeration");
  SupportSpectrum s;
  s.kind = kind;
  const auto& elems = *g.elements;
  if (kind == SupportKind::Fixed) {
    for (std::size_t i = 0; i < elems.size(); ++i) {
      ++s.counts[g.supports[i]];
      ++s.total;
    }
  } else {
    for (const Matrix& m : elems) {
      if (m.is_scalar()) continue;  // the projective notion ranges over g outside Z
      ++s.counts[projective_support(m)];
      ++s.total;
    }
  }
  return s;
}

std::optional<unsigned> min_supp(const MatrixGroup& g) {
  if (!g.enumerated()) throw NotEnumerated("MinSupp requires enumeration");
  std::optional<unsigned> best;
  for (std::size_t i = 1; i < g.elements->size(); ++i)
    if (!best || g.supports[i] < *best) best = g.supports[i];
  return best;
}

std::optional<unsigned> min_supp_projective(const MatrixGroup& g) {
  if (!g.enumerated()) throw NotEnumerated("MinSupp requires enumeration");
  std::optional<unsigned> best;
  for (const Matrix& m : *g.elements) {
    if (m.is_scalar()) continue;
    unsigned s = projective_support(m);
    if (!best || s < *best) best = s;
  }
  return best;
}

Matrix commutator(const Matrix& g, const Matrix& h) { return g.inverse() * h.inverse() * g * h; }

}  // namespace cpb
