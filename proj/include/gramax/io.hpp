#pragma once

#include <fstream>
#include <iomanip>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>

#include "gramax/error.hpp"
#include "gramax/linops.hpp"

namespace gramax {

// Dense text matrix format:
//   line 1:  "<rows> <cols>"
//   then one line per row, entries separated by single spaces, printed with
//   17 significant digits so that doubles round-trip exactly.

inline void write_matrix(std::ostream& os, const Matrix& M) {
  os << M.rows() << ' ' << M.cols() << '\n';
  os << std::setprecision(std::numeric_limits<double>::max_digits10);
  for (Index i = 0; i < M.rows(); ++i) {
    for (Index j = 0; j < M.cols(); ++j) {
      if (j) os << ' ';
      os << M(i, j);
    }
    os << '\n';
  }
}

inline Matrix read_matrix(std::istream& is) {
  long long rows = 0, cols = 0;
  if (!(is >> rows >> cols) || rows < 1 || cols < 1) {
    throw ParseError("matrix header must be two positive integers 'rows cols'");
  }
  Matrix M(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    for (Index j = 0; j < cols; ++j) {
      if (!(is >> M(i, j))) {
        throw ParseError("matrix entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                         ") is missing or malformed");
      }
    }
  }
  std::string extra;
  if (is >> extra) throw ParseError("trailing data after matrix entries: '" + extra + "'");
  if (!M.allFinite()) throw ParseError("matrix has non-finite entries");
  return M;
}

inline void save_matrix(const std::string& path, const Matrix& M) {
  std::ofstream os(path);
  if (!os) throw ParseError("cannot open '" + path + "' for writing");
  write_matrix(os, M);
  if (!os) throw ParseError("failed writing '" + path + "'");
}

inline Matrix load_matrix(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw ParseError("cannot open '" + path + "'");
  return read_matrix(is);
}

}  // namespace gramax
