#pragma once

#include <vector>

#include "psdcomp/hermitian.hpp"

namespace psdcomp {

// Hermitian matrix with a symmetric pattern of specified entries. The
// diagonal is always specified; unspecified entries hold a zero
// placeholder. Conjugate symmetry is maintained by every mutation.
class PartialHermitianMatrix {
public:
  struct Entry {
    int i = 0;  // 0-based row, i <= j
    int j = 0;
    Complex value;
  };

  // Upper-triangle entries; the mirror image is implied. Every diagonal
  // index must appear, diagonal values must be real, duplicates are
  // rejected.
  PartialHermitianMatrix(std::size_t n, const std::vector<Entry>& upper_entries);

  static PartialHermitianMatrix fully_specified(const HermitianMatrix& h);

  std::size_t dim() const { return entries_.rows(); }
  bool specified(std::size_t i, std::size_t j) const { return mask_[i * dim() + j]; }
  const Complex& entry(std::size_t i, std::size_t j) const { return entries_(i, j); }
  const ComplexMatrix& entries() const { return entries_; }

  void set(int i, int j, Complex value);

  bool is_fully_specified() const;
  bool block_fully_specified(std::span<const int> idx) const;
  std::size_t specified_count() const;

  /// Off-diagonal positions (i < j) that are not specified.
  std::vector<std::pair<int, int>> unspecified_positions() const;

  /// Requires a fully specified matrix.
  HermitianMatrix to_hermitian() const;

private:
  ComplexMatrix entries_;
  std::vector<char> mask_;
};

}  // namespace psdcomp
