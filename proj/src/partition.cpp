#include "cpbase/partition.hpp"

#include <map>

namespace cpb {

std::string Partition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts[i]);
  }
  s += ")";
  return s;
}

std::vector<Partition> partitions(unsigned m) {
  if (m < 1 || m > 40) throw OutOfRange("partition order must be in [1, 40]");
  std::vector<Partition> out;
  std::vector<unsigned> a = {m};
  for (;;) {
    out.emplace_back(a);
    // Next partition in descending lexicographic order: shrink the last
    // part greater than 1 and redistribute the surplus greedily.
    std::size_t k = a.size();
    while (k > 0 && a[k - 1] == 1) --k;
    if (k == 0) break;
    unsigned rem = static_cast<unsigned>(a.size() - k) + 1;  // freed units
    a.resize(k);
    a[k - 1] -= 1;
    unsigned cap = a[k - 1];
    while (rem > cap) {
      a.push_back(cap);
      rem -= cap;
    }
    a.push_back(rem);
  }
  return out;
}

Partition dual(const Partition& p) {
  std::vector<unsigned> d;
  if (p.parts.empty()) return Partition{};
  d.resize(p.parts[0], 0);
  for (unsigned part : p.parts)
    for (unsigned j = 0; j < part; ++j) ++d[j];
  return Partition(std::move(d));
}

Int class_size(const Partition& cycle_type) {
  // m! / prod_k k^{m_k} m_k!  where m_k = multiplicity of part k.
  std::map<unsigned, unsigned> mult;
  for (unsigned p : cycle_type.parts) ++mult[p];
  Int denom = 1;
  for (auto [k, mk] : mult) denom *= int_pow(Int(k), mk) * factorial(mk);
  return factorial(cycle_type.order()) / denom;
}

int cycle_type_sign(const Partition& cycle_type) {
  // Each k-cycle contributes (-1)^(k-1).
  unsigned transpositions = cycle_type.order() - static_cast<unsigned>(cycle_type.length());
  return transpositions % 2 == 0 ? 1 : -1;
}

}  // namespace cpb
