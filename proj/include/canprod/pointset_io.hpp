#pragma once

#include <iosfwd>
#include <string>

#include "canprod/core.hpp"

namespace canprod {

// One-column CSV (header "x", LF line endings, 17 significant digits).
void write_pointset_csv(const DiscretePointSet& X, std::ostream& out);
void write_pointset_csv(const DiscretePointSet& X, const std::string& path);
DiscretePointSet read_pointset_csv(std::istream& in);
DiscretePointSet read_pointset_csv(const std::string& path);

// Shortest bit-faithful-enough fixed formatting used for all emitted numbers.
std::string format_number(double v);

}  // namespace canprod
