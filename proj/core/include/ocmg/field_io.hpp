#ifndef OCMG_FIELD_IO_HPP
#define OCMG_FIELD_IO_HPP

// Grid-text format: first line "N <value>", then (N-1)^2 lines "i j value"
// in storage order (j outer, i inner), values with 17 significant digits.

#include "ocmg/grid.hpp"

#include <iosfwd>
#include <string>

namespace ocmg {

void write_field(std::ostream &os, const ScalarField &f);
void write_field(const std::string &path, const ScalarField &f);

/// Throws std::runtime_error on malformed input (bad header, wrong count,
/// out-of-range or out-of-order indices).
ScalarField read_field(std::istream &is);
ScalarField read_field(const std::string &path);

} // namespace ocmg

#endif // OCMG_FIELD_IO_HPP
