#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace psdcomp {

using Complex = std::complex<double>;

// Dense row-major complex matrix. Value type: copies are deep, all
// operations return fresh matrices.
class ComplexMatrix {
public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> data);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix zero(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const Complex> data() const { return data_; }

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;
  double frobenius_norm() const;
  bool all_finite() const;

  // Submatrix with the given row and column index lists (0-based).
  ComplexMatrix submatrix(std::span<const int> row_idx, std::span<const int> col_idx) const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex s);

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex s, ComplexMatrix a);
std::vector<Complex> operator*(const ComplexMatrix& a, const std::vector<Complex>& x);

// det(A) by LU with partial pivoting. Independent of the eigensolver.
Complex lu_determinant(ComplexMatrix a);

}  // namespace psdcomp
