#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "psdcomp/partial_matrix.hpp"

namespace psdcomp {

// Text format, one entry per line:
//   phm <n>
//   <i> <j> <re> <im>
// 1-based upper-triangle indices (i <= j); the lower triangle is implied
// by conjugate symmetry. '#' starts a comment line. Diagonal lines must
// have im = 0 and every diagonal index must appear.
class ParseError : public std::runtime_error {
public:
  ParseError(int line_in, const std::string& message)
      : std::runtime_error(line_in > 0 ? "line " + std::to_string(line_in) + ": " + message
                                       : message),
        line(line_in) {}
  int line;  // 0 when the error is not tied to a single line
};

PartialHermitianMatrix read_partial_matrix(std::istream& in);
PartialHermitianMatrix read_partial_matrix_file(const std::string& path);

void write_partial_matrix(std::ostream& out, const PartialHermitianMatrix& m);
void write_partial_matrix_file(const std::string& path, const PartialHermitianMatrix& m);

/// Shortest representation that round-trips binary64 (17 significant digits).
std::string format_float(double v);

}  // namespace psdcomp
