#include "psdcomp/hermitian.hpp"

#include <cmath>
#include <stdexcept>

namespace psdcomp {

namespace {
constexpr double kAsymmetryRtol = 1e-8;
}

void TolerancePolicy::validate() const {
  if (!(rank_rtol > 0.0) || !(psd_rtol > 0.0) || !(zero_atol > 0.0)) {
    throw std::invalid_argument("TolerancePolicy: all tolerances must be strictly positive");
  }
}

HermitianMatrix::HermitianMatrix(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("HermitianMatrix: matrix must be square");
  }
  if (m.rows() == 0) {
    throw std::invalid_argument("HermitianMatrix: dimension must be at least 1");
  }
  if (!m.all_finite()) {
    throw std::invalid_argument("HermitianMatrix: entries must be finite");
  }
  const std::size_t n = m.rows();
  double asym2 = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      asym2 += std::norm(m(i, j) - std::conj(m(j, i)));
    }
  }
  const double scale = m.frobenius_norm();
  if (std::sqrt(asym2) > kAsymmetryRtol * scale) {
    throw std::invalid_argument("HermitianMatrix: input is not Hermitian (relative asymmetry exceeds 1e-8)");
  }
  mat_ = ComplexMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    mat_(i, i) = Complex(m(i, i).real(), 0.0);
    for (std::size_t j = i + 1; j < n; ++j) {
      const Complex v = 0.5 * (m(i, j) + std::conj(m(j, i)));
      mat_(i, j) = v;
      mat_(j, i) = std::conj(v);
    }
  }
}

HermitianMatrix HermitianMatrix::identity(std::size_t n) {
  return HermitianMatrix(ComplexMatrix::identity(n), AlreadyHermitian{});
}

HermitianMatrix HermitianMatrix::zero(std::size_t n) {
  if (n == 0) throw std::invalid_argument("HermitianMatrix: dimension must be at least 1");
  return HermitianMatrix(ComplexMatrix(n, n), AlreadyHermitian{});
}

HermitianMatrix HermitianMatrix::diagonal(const std::vector<double>& d) {
  if (d.empty()) throw std::invalid_argument("HermitianMatrix: dimension must be at least 1");
  ComplexMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return HermitianMatrix(m, AlreadyHermitian{});
}

HermitianMatrix HermitianMatrix::from_real(std::size_t n, const std::vector<double>& values) {
  if (values.size() != n * n) {
    throw std::invalid_argument("HermitianMatrix::from_real: value count does not match dimension");
  }
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = values[i * n + j];
  return HermitianMatrix(m);
}

HermitianMatrix HermitianMatrix::principal_submatrix(std::span<const int> idx) const {
  if (idx.empty()) {
    throw std::invalid_argument("HermitianMatrix: principal submatrix needs at least one index");
  }
  return HermitianMatrix(mat_.submatrix(idx, idx), AlreadyHermitian{});
}

}  // namespace psdcomp
