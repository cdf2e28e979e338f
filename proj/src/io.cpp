#include "cpbase/io.hpp"

#include <istream>
#include <ostream>

namespace cpb {

void write_matrix(std::ostream& os, const Matrix& m) {
  os << m.dim() << " " << m.field()->order() << "\n";
  for (unsigned i = 0; i < m.dim(); ++i) {
    for (unsigned j = 0; j < m.dim(); ++j) {
      if (j) os << " ";
      os << m.at(i, j);
    }
    os << "\n";
  }
}

Matrix read_matrix(std::istream& is, std::uint64_t field_cap) {
  unsigned n = 0;
  std::uint64_t q = 0;
  if (!(is >> n >> q)) throw ConfigError("matrix fixture: bad header");
  // Recover (p, e) from q: the least prime power decomposition.
  std::uint64_t p = q;
  unsigned e = 1;
  for (std::uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      std::uint64_t t = q;
      unsigned k = 0;
      while (t % d == 0) {
        t /= d;
        ++k;
      }
      if (t != 1) throw ConfigError("matrix fixture: field size is not a prime power");
      p = d;
      e = k;
      break;
    }
  }
  FieldPtr F = Field::make(p, e, field_cap);
  Matrix m(F, n);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) {
      std::uint64_t v = 0;
      if (!(is >> v)) throw ConfigError("matrix fixture: truncated entries");
      m.set(i, j, F->element(v));
    }
  return m;
}

void write_group_dump(std::ostream& os, const MatrixGroup& g) {
  if (!g.enumerated()) throw NotEnumerated("group dump requires enumeration");
  os << g.label << " " << g.dim << " " << g.field->order() << " " << g.order() << "\n";
  for (const Matrix& m : *g.elements) {
    bool first = true;
    for (scalar_t v : m.data()) {
      if (!first) os << " ";
      os << v;
      first = false;
    }
    os << "\n";
  }
}

void write_spectrum_csv(std::ostream& os, const SupportSpectrum& s) {
  const char* kind = s.kind == SupportKind::Fixed ? "fixed" : "projective";
  os << "support,count,kind\n";
  for (auto [supp, count] : s.counts) os << supp << "," << count << "," << kind << "\n";
}

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out.push_back(c);
  }
  out += "\"";
  return out;
}

void write_character_csv(std::ostream& os, unsigned m) {
  if (m < 3) throw OutOfRange("character sweep needs m >= 3 (a 3-cycle must exist)");
  os << "m,lambda,degree,value_at_3cycle,slack_numerator,slack_denominator\n";
  std::vector<unsigned> tc = {3};
  for (unsigned i = 3; i < m; ++i) tc.push_back(1);
  CharacterEvaluator ev{Partition(tc)};
  for (const Partition& lambda : partitions(m)) {
    const Int deg = hook_degree(lambda);
    const Int val = ev.value(lambda);
    // Slack of the 3-cycle gap bound: (deg - val) - deg/(m-1), exact.
    const Int num = Int(m - 1) * (deg - val) - deg;
    os << m << "," << csv_quote(lambda.to_string()) << "," << deg.str() << "," << val.str() << ","
       << num.str() << "," << (m - 1) << "\n";
  }
}

}  // namespace cpb
