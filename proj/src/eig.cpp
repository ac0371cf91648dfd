#include "psdcomp/eig.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace psdcomp {

namespace {

constexpr double kOffDiagRtol = 1e-14;
constexpr int kMaxSweeps = 100;

double offdiag_norm(const ComplexMatrix& a) {
  const std::size_t n = a.rows();
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) s += 2.0 * std::norm(a(i, j));
  return std::sqrt(s);
}

// One rotation annihilating a(p,q). The 2x2 pivot block
// [[alpha, beta], [conj(beta), gamma]] is diagonalized by the unitary
// [[c, -s e^{i phi}], [s e^{-i phi}, c]] with phi = arg(beta) and
// tan(theta) the magnitude-minimal root of t^2 - 2*tau*t - 1 = 0,
// tau = (gamma - alpha) / (2 |beta|). |t| <= 1 keeps the sweep stable.
void rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q) {
  const Complex beta = a(p, q);
  const double babs = std::abs(beta);
  if (babs == 0.0) return;

  const double alpha = a(p, p).real();
  const double gamma = a(q, q).real();
  const double tau = (gamma - alpha) / (2.0 * babs);
  double t;
  if (std::abs(tau) > 1e150) {
    t = -1.0 / (2.0 * tau);
  } else if (tau >= 0.0) {
    t = -1.0 / (tau + std::sqrt(tau * tau + 1.0));
  } else {
    t = 1.0 / (-tau + std::sqrt(tau * tau + 1.0));
  }
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;
  const Complex phase = beta / babs;
  const Complex sp = s * phase;             // s e^{i phi}
  const Complex spc = s * std::conj(phase); // s e^{-i phi}

  const std::size_t n = a.rows();
  // Columns p,q of A <- A U.
  for (std::size_t i = 0; i < n; ++i) {
    const Complex aip = a(i, p);
    const Complex aiq = a(i, q);
    a(i, p) = c * aip + spc * aiq;
    a(i, q) = -sp * aip + c * aiq;
  }
  // Rows p,q of A <- U* A.
  for (std::size_t j = 0; j < n; ++j) {
    const Complex apj = a(p, j);
    const Complex aqj = a(q, j);
    a(p, j) = c * apj + sp * aqj;
    a(q, j) = -spc * apj + c * aqj;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = Complex(a(p, p).real(), 0.0);
  a(q, q) = Complex(a(q, q).real(), 0.0);
  // Accumulate V <- V U.
  for (std::size_t i = 0; i < n; ++i) {
    const Complex vip = v(i, p);
    const Complex viq = v(i, q);
    v(i, p) = c * vip + spc * viq;
    v(i, q) = -sp * vip + c * viq;
  }
}

}  // namespace

EigenDecomposition hermitian_eig(const HermitianMatrix& h) {
  const std::size_t n = h.dim();
  ComplexMatrix a = h.matrix();
  ComplexMatrix v = ComplexMatrix::identity(n);
  const double scale = a.frobenius_norm();
  const double target = kOffDiagRtol * scale;

  int sweep = 0;
  while (offdiag_norm(a) > target) {
    if (sweep++ >= kMaxSweeps) {
      throw std::runtime_error("hermitian_eig: Jacobi sweeps did not converge");
    }
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) rotate(a, v, p, q);
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int i, int j) {
    return a(static_cast<std::size_t>(i), static_cast<std::size_t>(i)).real() >
           a(static_cast<std::size_t>(j), static_cast<std::size_t>(j)).real();
  });

  EigenDecomposition eig;
  eig.eigenvalues.resize(n);
  eig.vectors = ComplexMatrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const auto src = static_cast<std::size_t>(order[k]);
    eig.eigenvalues[k] = a(src, src).real();
    for (std::size_t i = 0; i < n; ++i) eig.vectors(i, k) = v(i, src);
  }
  return eig;
}

int numerical_rank(const EigenDecomposition& eig, const TolerancePolicy& tol) {
  tol.validate();
  if (eig.eigenvalues.empty()) return 0;
  const double maxabs = std::max(std::abs(eig.eigenvalues.front()), std::abs(eig.eigenvalues.back()));
  int r = 0;
  for (double lam : eig.eigenvalues) {
    if (std::abs(lam) > tol.rank_rtol * maxabs) ++r;
  }
  return r;
}

HermitianMatrix pinv(const HermitianMatrix& h, const TolerancePolicy& tol) {
  tol.validate();
  const EigenDecomposition eig = hermitian_eig(h);
  const std::size_t n = h.dim();
  const double maxabs = std::max(std::abs(eig.eigenvalues.front()), std::abs(eig.eigenvalues.back()));
  const double threshold = tol.rank_rtol * maxabs;

  ComplexMatrix result(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const double lam = eig.eigenvalues[k];
    if (std::abs(lam) <= threshold) continue;
    const double w = 1.0 / lam;
    for (std::size_t i = 0; i < n; ++i) {
      const Complex ui = eig.vectors(i, k);
      for (std::size_t j = 0; j < n; ++j) {
        result(i, j) += w * ui * std::conj(eig.vectors(j, k));
      }
    }
  }
  return HermitianMatrix(result);
}

bool is_psd(const HermitianMatrix& h, const TolerancePolicy& tol) {
  tol.validate();
  const EigenDecomposition eig = hermitian_eig(h);
  const double lam_max = eig.eigenvalues.front();
  const double lam_min = eig.eigenvalues.back();
  return lam_min >= -tol.psd_rtol * std::max(lam_max, 1.0);
}

HermitianMatrix range_projector(const HermitianMatrix& h, const TolerancePolicy& tol) {
  return HermitianMatrix(h.matrix() * pinv(h, tol).matrix());
}

}  // namespace psdcomp
