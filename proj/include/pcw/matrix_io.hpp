#pragma once

#include <iosfwd>
#include <string>

#include "pcw/ring.hpp"

namespace pcw {

/// Matrix text format: first line `n m q`, then m rows of n entries in
/// [0, q), whitespace-tolerant; `#` starts a comment. Errors carry line
/// numbers.
ParityCheckMatrix parse_matrix_text(std::istream& in);
ParityCheckMatrix parse_matrix_file(const std::string& path);

std::string matrix_to_text(const ParityCheckMatrix& H);

}  // namespace pcw
