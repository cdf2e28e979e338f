#pragma once

#include <iosfwd>
#include <string>

#include "cpbase/characters.hpp"
#include "cpbase/group.hpp"

namespace cpb {

/// Matrix text fixture: first line "n q", then n rows of n entries
/// (extension-field scalars as their encoded integer value).
void write_matrix(std::ostream& os, const Matrix& m);
Matrix read_matrix(std::istream& is, std::uint64_t field_cap = Field::kDefaultCap);

/// Group dump: header "label n q order", then one row-major serialized
/// element per line. Requires enumeration.
void write_group_dump(std::ostream& os, const MatrixGroup& g);

/// Spectrum CSV with header "support,count,kind".
void write_spectrum_csv(std::ostream& os, const SupportSpectrum& s);

/// Character sweep CSV: one row per partition of m with the value on a
/// 3-cycle and the exact slack of the gap bound, as numerator/denominator.
/// Header: m,lambda,degree,value_at_3cycle,slack_numerator,slack_denominator.
void write_character_csv(std::ostream& os, unsigned m);

std::string csv_quote(const std::string& s);

}  // namespace cpb
