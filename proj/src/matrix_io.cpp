#include "psdcomp/matrix_io.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <vector>

namespace psdcomp {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream stream(line);
  std::string token;
  while (stream >> token) tokens.push_back(token);
  return tokens;
}

std::optional<long> parse_int(const std::string& token) {
  if (token.empty()) return std::nullopt;
  char* end = nullptr;
  const long v = std::strtol(token.c_str(), &end, 10);
  if (end != token.c_str() + token.size()) return std::nullopt;
  return v;
}

std::optional<double> parse_double(const std::string& token) {
  if (token.empty()) return std::nullopt;
  char* end = nullptr;
  const double v = std::strtod(token.c_str(), &end);
  if (end != token.c_str() + token.size()) return std::nullopt;
  return v;
}

bool is_comment_or_blank(const std::string& line) {
  for (char c : line) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '#';
  }
  return true;
}

}  // namespace

PartialHermitianMatrix read_partial_matrix(std::istream& in) {
  std::string line;
  int lineno = 0;
  long n = -1;
  std::vector<PartialHermitianMatrix::Entry> entries;
  std::set<std::pair<long, long>> seen;

  while (std::getline(in, line)) {
    ++lineno;
    if (is_comment_or_blank(line)) continue;
    const auto tokens = tokenize(line);

    if (n < 0) {
      if (tokens.size() != 2 || tokens[0] != "phm") {
        throw ParseError(lineno, "expected header 'phm <n>'");
      }
      const auto parsed = parse_int(tokens[1]);
      if (!parsed || *parsed < 1) {
        throw ParseError(lineno, "matrix dimension must be a positive integer");
      }
      n = *parsed;
      continue;
    }

    if (tokens.size() != 4) {
      throw ParseError(lineno, "expected '<i> <j> <re> <im>'");
    }
    const auto i = parse_int(tokens[0]);
    const auto j = parse_int(tokens[1]);
    const auto re = parse_double(tokens[2]);
    const auto im = parse_double(tokens[3]);
    if (!i || !j) throw ParseError(lineno, "indices must be integers");
    if (!re || !im) throw ParseError(lineno, "entry values must be decimal floats");
    if (*i < 1 || *j < 1 || *i > n || *j > n) {
      throw ParseError(lineno, "index out of range 1.." + std::to_string(n));
    }
    if (*i > *j) throw ParseError(lineno, "only the upper triangle is stored; need i <= j");
    if (*i == *j && *im != 0.0) throw ParseError(lineno, "diagonal entries must have im = 0");
    if (!std::isfinite(*re) || !std::isfinite(*im)) {
      throw ParseError(lineno, "entry values must be finite");
    }
    if (!seen.insert({*i, *j}).second) {
      throw ParseError(lineno, "duplicate entry (" + std::to_string(*i) + ", " +
                                   std::to_string(*j) + ")");
    }
    entries.push_back({static_cast<int>(*i - 1), static_cast<int>(*j - 1), Complex(*re, *im)});
  }

  if (n < 0) throw ParseError(lineno, "missing 'phm <n>' header");
  try {
    return PartialHermitianMatrix(static_cast<std::size_t>(n), entries);
  } catch (const std::invalid_argument& err) {
    throw ParseError(0, err.what());
  }
}

PartialHermitianMatrix read_partial_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "' for reading");
  return read_partial_matrix(in);
}

void write_partial_matrix(std::ostream& out, const PartialHermitianMatrix& m) {
  const std::size_t n = m.dim();
  out << "phm " << n << "\n";
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      if (!m.specified(i, j)) continue;
      const Complex v = m.entry(i, j);
      out << (i + 1) << ' ' << (j + 1) << ' ' << format_float(v.real()) << ' '
          << format_float(v.imag()) << "\n";
    }
  }
}

void write_partial_matrix_file(const std::string& path, const PartialHermitianMatrix& m) {
  std::ofstream out(path);
  if (!out) throw ParseError(0, "cannot open '" + path + "' for writing");
  write_partial_matrix(out, m);
  if (!out) throw ParseError(0, "failed writing '" + path + "'");
}

std::string format_float(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace psdcomp
