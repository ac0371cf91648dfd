#pragma once

#include <vector>

#include "psdcomp/complex_matrix.hpp"

namespace psdcomp {

/// Thresholds for rank decisions, PSD tests and exact-zero tests.
/// rank_rtol and psd_rtol are relative to the spectral scale of the
/// matrix at hand; zero_atol is absolute.
struct TolerancePolicy {
  double rank_rtol = 1e-9;
  double psd_rtol = 1e-9;
  double zero_atol = 1e-12;

  void validate() const;
};

// n x n complex matrix with entries[i][j] == conj(entries[j][i]) held
// exactly. Construction symmetrizes (M + M*)/2 and zeroes the imaginary
// part of the diagonal; input whose relative asymmetry exceeds 1e-8 is
// rejected rather than silently averaged.
class HermitianMatrix {
public:
  explicit HermitianMatrix(const ComplexMatrix& m);

  static HermitianMatrix identity(std::size_t n);
  static HermitianMatrix zero(std::size_t n);
  static HermitianMatrix diagonal(const std::vector<double>& d);
  // Real symmetric input, row-major n*n values.
  static HermitianMatrix from_real(std::size_t n, const std::vector<double>& values);

  std::size_t dim() const { return mat_.rows(); }
  const Complex& operator()(std::size_t i, std::size_t j) const { return mat_(i, j); }
  const ComplexMatrix& matrix() const { return mat_; }

  double frobenius_norm() const { return mat_.frobenius_norm(); }

  // Principal submatrix on the given (0-based) index list.
  HermitianMatrix principal_submatrix(std::span<const int> idx) const;

private:
  struct AlreadyHermitian {};
  HermitianMatrix(ComplexMatrix m, AlreadyHermitian) : mat_(std::move(m)) {}

  ComplexMatrix mat_;
};

}  // namespace psdcomp
