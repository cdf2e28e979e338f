#include "cpbase/characters.hpp"

#include <algorithm>

namespace cpb {

Int hook_degree(const Partition& lambda) {
  if (lambda.parts.empty()) return 1;
  const Partition conj = dual(lambda);
  Int hooks = 1;
  for (std::size_t i = 0; i < lambda.parts.size(); ++i)
    for (unsigned j = 0; j < lambda.parts[i]; ++j) {
      // Cell (i, j), 0-based: arm + leg + 1.
      unsigned h = (lambda.parts[i] - j - 1) + (conj.parts[j] - static_cast<unsigned>(i) - 1) + 1;
      hooks *= h;
    }
  return factorial(lambda.order()) / hooks;
}

CharacterEvaluator::CharacterEvaluator(Partition rho) : rho_(std::move(rho)) {
  std::size_t k = rho_.parts.size();
  while (k > 0 && rho_.parts[k - 1] == 1) --k;
  ones_suffix_start_ = k;
}

namespace {

std::string memo_key(const std::vector<unsigned>& parts, std::size_t k) {
  std::string s;
  s.reserve(parts.size() * 3 + 4);
  for (unsigned p : parts) {
    s += std::to_string(p);
    s.push_back(',');
  }
  s.push_back('|');
  s += std::to_string(k);
  return s;
}

}  // namespace

Int CharacterEvaluator::value(const Partition& lambda) {
  if (lambda.order() != rho_.order())
    throw OrderMismatch("character and class partitions have different orders");
  return eval(lambda.parts, 0);
}

Int CharacterEvaluator::eval(const std::vector<unsigned>& parts, std::size_t k) {
  if (parts.empty()) return 1;  // all cycle parts consumed in lockstep with cells
  // Once only fixed points remain, the value collapses to the number of
  // standard tableaux of the remaining shape.
  if (k >= ones_suffix_start_) return hook_degree(Partition(parts));

  const std::string key = memo_key(parts, k);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  const unsigned t = rho_.parts[k];

  // First-column hook lengths ("beta set"): b_i = parts[i] + (len - 1 - i),
  // strictly decreasing. Removing a rim hook of length t replaces some b by
  // b - t, legal when b >= t and b - t is not already present; the sign is
  // (-1)^(number of entries jumped over).
  const std::size_t len = parts.size();
  std::vector<unsigned> beta(len);
  for (std::size_t i = 0; i < len; ++i) beta[i] = parts[i] + static_cast<unsigned>(len - 1 - i);

  Int total = 0;
  for (std::size_t i = 0; i < len; ++i) {
    if (beta[i] < t) break;  // beta is decreasing: no later entry can work
    unsigned nb = beta[i] - t;
    bool clash = false;
    std::size_t jumped = 0;
    for (std::size_t j = i + 1; j < len; ++j) {
      if (beta[j] == nb) {
        clash = true;
        break;
      }
      if (beta[j] > nb) ++jumped;
    }
    if (clash) continue;
    // Rebuild the partition from the modified beta set.
    std::vector<unsigned> nbeta = beta;
    nbeta[i] = nb;
    std::sort(nbeta.begin(), nbeta.end(), std::greater<unsigned>());
    std::vector<unsigned> nparts;
    nparts.reserve(len);
    for (std::size_t r = 0; r < len; ++r) {
      unsigned part = nbeta[r] - static_cast<unsigned>(len - 1 - r);
      if (part > 0) nparts.push_back(part);
    }
    Int sub = eval(nparts, k + 1);
    if (jumped % 2 == 1) sub = -sub;
    total += sub;
  }
  memo_.emplace(key, total);
  return total;
}

Int character_value(const Partition& lambda, const Partition& rho) {
  CharacterEvaluator ev(rho);
  return ev.value(lambda);
}

CharTable char_table(unsigned m) {
  CharTable t;
  t.m = m;
  t.index = partitions(m);
  t.values.assign(t.index.size(), std::vector<Int>(t.index.size()));
  t.sizes.reserve(t.index.size());
  for (const Partition& rho : t.index) t.sizes.push_back(class_size(rho));
  for (std::size_t c = 0; c < t.index.size(); ++c) {
    CharacterEvaluator ev(t.index[c]);  // one evaluator per class: shared memo
    for (std::size_t r = 0; r < t.index.size(); ++r) t.values[r][c] = ev.value(t.index[r]);
  }
  return t;
}

Rational mr_via_table(unsigned m) {
  if (m < 2 || m > 12) throw OutOfRange("character-table ratio supported for m in [2, 12]");
  CharTable t = char_table(m);
  Rational best = 0;
  for (std::size_t r = 0; r < t.index.size(); ++r) {
    // The degree is the value on the identity class (1^m), the last column
    // in the partitions() order.
    const Int degree = t.values[r].back();
    if (degree == 1) continue;  // linear characters are excluded
    for (std::size_t c = 0; c < t.index.size(); ++c) {
      Int v = abs(t.values[r][c]);
      if (v == degree) continue;  // class acts as a scalar for this character
      Rational ratio(v, degree);
      if (ratio > best) best = ratio;
    }
  }
  return best;
}

std::optional<Rational> ratio_at(const Partition& lambda, const Partition& rho) {
  const Int degree = hook_degree(lambda);
  if (degree == 1) return std::nullopt;
  const Int v = abs(character_value(lambda, rho));
  if (v == degree) return std::nullopt;
  return Rational(v, degree);
}

std::vector<ShallowCharacterRow> shallow_character_rows(unsigned m) {
  if (m < 15) throw OutOfRange("closed-form rows require m >= 15");
  const Int M = m;
  std::vector<std::pair<Partition, std::pair<Int, Int>>> rows = {
      {Partition{m}, {Int(1), Int(1)}},
      {Partition{m - 1, 1}, {M - 1, M - 4}},
      {Partition{m - 2, 2}, {M * (M - 3) / 2, (M - 3) * (M - 6) / 2}},
      {Partition{m - 2, 1, 1}, {(M - 1) * (M - 2) / 2, (M - 4) * (M - 5) / 2}},
      {Partition{m - 3, 3}, {M * (M - 1) * (M - 5) / 6, (M - 3) * (M - 4) * (M - 8) / 6 + 1}},
      {Partition{m - 3, 2, 1}, {M * (M - 2) * (M - 4) / 3, (M - 3) * (M - 5) * (M - 7) / 3 - 1}},
      {Partition{m - 3, 1, 1, 1}, {(M - 1) * (M - 2) * (M - 3) / 6, (M - 4) * (M - 5) * (M - 6) / 6 + 1}},
  };
  // Class of one 3-cycle.
  std::vector<unsigned> tc = {3};
  for (unsigned i = 3; i < m; ++i) tc.push_back(1);
  CharacterEvaluator ev{Partition(tc)};

  std::vector<ShallowCharacterRow> out;
  out.reserve(rows.size());
  for (auto& [lambda, closed] : rows) {
    ShallowCharacterRow row;
    row.lambda = lambda;
    row.degree = hook_degree(lambda);
    row.three_cycle = ev.value(lambda);
    row.degree_closed = closed.first;
    row.three_cycle_closed = closed.second;
    out.push_back(std::move(row));
  }
  return out;
}

ThreeCycleGapReport verify_three_cycle_gap(unsigned m) {
  if (m < 3 || m > 22) throw OutOfRange("3-cycle gap check supported for m in [3, 22]");
  std::vector<unsigned> tc = {3};
  for (unsigned i = 3; i < m; ++i) tc.push_back(1);
  CharacterEvaluator ev{Partition(tc)};

  ThreeCycleGapReport rep;
  rep.m = m;
  bool first = true;
  for (const Partition& lambda : partitions(m)) {
    if (lambda.length() == 1 || lambda.parts[0] == 1) continue;  // (m) and (1^m)
    Int deg = hook_degree(lambda);
    Int val = ev.value(lambda);
    ++rep.checked;
    // gap - deg/(m-1) >= 0  <=>  (m-1)(deg - val) - deg >= 0
    Int scaled = Int(m - 1) * (deg - val) - deg;
    if (scaled < 0) rep.violations.push_back(lambda);
    Rational slack(scaled, Int(m - 1));
    if (first || slack < rep.min_slack) {
      rep.min_slack = slack;
      rep.min_slack_at = lambda;
      first = false;
    }
  }
  return rep;
}

}  // namespace cpb
