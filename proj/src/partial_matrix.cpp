#include "psdcomp/partial_matrix.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace psdcomp {

PartialHermitianMatrix::PartialHermitianMatrix(std::size_t n, const std::vector<Entry>& upper_entries)
    : entries_(n, n), mask_(n * n, 0) {
  if (n == 0) throw std::invalid_argument("PartialHermitianMatrix: dimension must be at least 1");
  for (const Entry& e : upper_entries) {
    if (e.i < 0 || e.j < static_cast<int>(e.i) || static_cast<std::size_t>(e.j) >= n) {
      throw std::invalid_argument("PartialHermitianMatrix: entry index out of range or not upper-triangular");
    }
    if (specified(static_cast<std::size_t>(e.i), static_cast<std::size_t>(e.j))) {
      throw std::invalid_argument("PartialHermitianMatrix: duplicate entry (" +
                                  std::to_string(e.i + 1) + ", " + std::to_string(e.j + 1) + ")");
    }
    set(e.i, e.j, e.value);
  }
  for (std::size_t d = 0; d < n; ++d) {
    if (!specified(d, d)) {
      throw std::invalid_argument("PartialHermitianMatrix: diagonal entry " +
                                  std::to_string(d + 1) + " is unspecified");
    }
  }
}

PartialHermitianMatrix PartialHermitianMatrix::fully_specified(const HermitianMatrix& h) {
  std::vector<Entry> entries;
  const std::size_t n = h.dim();
  entries.reserve(n * (n + 1) / 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      entries.push_back({static_cast<int>(i), static_cast<int>(j), h(i, j)});
  return PartialHermitianMatrix(n, entries);
}

void PartialHermitianMatrix::set(int i, int j, Complex value) {
  const std::size_t n = dim();
  if (i < 0 || j < 0 || static_cast<std::size_t>(i) >= n || static_cast<std::size_t>(j) >= n) {
    throw std::invalid_argument("PartialHermitianMatrix: index out of range");
  }
  if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) {
    throw std::invalid_argument("PartialHermitianMatrix: entries must be finite");
  }
  if (i == j && value.imag() != 0.0) {
    throw std::invalid_argument("PartialHermitianMatrix: diagonal entries must be real");
  }
  entries_(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = value;
  mask_[static_cast<std::size_t>(i) * n + static_cast<std::size_t>(j)] = 1;
  if (i != j) {
    entries_(static_cast<std::size_t>(j), static_cast<std::size_t>(i)) = std::conj(value);
    mask_[static_cast<std::size_t>(j) * n + static_cast<std::size_t>(i)] = 1;
  }
}

bool PartialHermitianMatrix::is_fully_specified() const {
  for (char m : mask_) {
    if (!m) return false;
  }
  return true;
}

bool PartialHermitianMatrix::block_fully_specified(std::span<const int> idx) const {
  for (int i : idx) {
    for (int j : idx) {
      if (!specified(static_cast<std::size_t>(i), static_cast<std::size_t>(j))) return false;
    }
  }
  return true;
}

std::size_t PartialHermitianMatrix::specified_count() const {
  std::size_t c = 0;
  for (char m : mask_) c += static_cast<std::size_t>(m);
  return c;
}

std::vector<std::pair<int, int>> PartialHermitianMatrix::unspecified_positions() const {
  std::vector<std::pair<int, int>> out;
  const std::size_t n = dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!specified(i, j)) out.push_back({static_cast<int>(i), static_cast<int>(j)});
  return out;
}

HermitianMatrix PartialHermitianMatrix::to_hermitian() const {
  if (!is_fully_specified()) {
    throw std::invalid_argument("PartialHermitianMatrix: matrix is not fully specified");
  }
  return HermitianMatrix(entries_);
}

}  // namespace psdcomp
