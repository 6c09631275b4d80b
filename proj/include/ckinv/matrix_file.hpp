#pragma once

// Plain-text 0-1 matrix files: '#' comment lines, blank lines ignored, one
// matrix row per data line as 0/1 tokens separated by spaces or tabs.

#include <iosfwd>
#include <string>

#include "ckinv/exactmat.hpp"

namespace ckinv {

/// Throws Error(ParseError) on a bad token, ragged rows, non-square data
/// or an empty file.
IntMatrix parse_matrix(std::istream& in);
IntMatrix parse_matrix_string(const std::string& text);
IntMatrix read_matrix_file(const std::string& path);

std::string format_matrix(const IntMatrix& m);

}  // namespace ckinv
