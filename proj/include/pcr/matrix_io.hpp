#pragma once

#include <iosfwd>
#include <string>

#include "pcr/bitmatrix.hpp"

namespace pcr {

// Plain text: one row per line, '0'/'1' characters, optional spaces.
BitMatrix read_plain(std::istream& in);
std::string write_plain(const BitMatrix& m);

// alist: "n m" header, column/row degrees, then 1-based index lists.
BitMatrix read_alist(std::istream& in);
std::string write_alist(const BitMatrix& m);

// Auto-detects plain vs alist from the first line.
BitMatrix read_matrix_file(const std::string& path);

// Compact base64 form: two little-endian 16-bit dimensions followed by the
// bits in row-major order, packed 8 per byte.
std::string to_base64(const BitMatrix& m);
BitMatrix from_base64(const std::string& text);

}  // namespace pcr
