#include "psdcomp/semidefinite.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace psdcomp {

namespace {

constexpr double kVerifyRtol = 1e-7;

double max_abs_eigenvalue(const EigenDecomposition& eig) {
  return std::max(std::abs(eig.eigenvalues.front()), std::abs(eig.eigenvalues.back()));
}

void require_psd(const HermitianMatrix& h, const TolerancePolicy& tol, const char* who) {
  if (!is_psd(h, tol)) {
    throw std::invalid_argument(std::string(who) + ": input must be positive semidefinite");
  }
}

void require_maximal_rank(const HermitianMatrix& h, const BlockPartition& p,
                          const TolerancePolicy& tol, const char* who) {
  if (!is_maximal_rank(h, p, tol)) {
    throw std::invalid_argument(std::string(who) + ": input must be of maximal rank");
  }
}

}  // namespace

void BlockPartition::validate_for(std::size_t dim) const {
  if (k < 1 || l < 1 || k + l != dim) {
    throw std::invalid_argument("BlockPartition: need k >= 1, l >= 1, k + l = dim");
  }
}

BlockView split(const HermitianMatrix& h, const BlockPartition& p) {
  p.validate_for(h.dim());
  std::vector<int> head(p.k), tail(p.l);
  for (std::size_t i = 0; i < p.k; ++i) head[i] = static_cast<int>(i);
  for (std::size_t i = 0; i < p.l; ++i) tail[i] = static_cast<int>(p.k + i);
  return BlockView{h.principal_submatrix(head), h.matrix().submatrix(head, tail),
                   h.principal_submatrix(tail)};
}

HermitianMatrix assemble(const ComplexMatrix& a, const ComplexMatrix& b, const ComplexMatrix& c) {
  const std::size_t k = a.rows();
  const std::size_t l = c.rows();
  if (a.cols() != k || c.cols() != l || b.rows() != k || b.cols() != l) {
    throw std::invalid_argument("assemble: inconsistent block dimensions");
  }
  ComplexMatrix m(k + l, k + l);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) m(i, j) = a(i, j);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < l; ++j) {
      m(i, k + j) = b(i, j);
      m(k + j, i) = std::conj(b(i, j));
    }
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = 0; j < l; ++j) m(k + i, k + j) = c(i, j);
  return HermitianMatrix(m);
}

bool column_inclusion_holds(const HermitianMatrix& h, const BlockPartition& p,
                            const TolerancePolicy& tol) {
  tol.validate();
  const BlockView v = split(h, p);
  const auto eig_a = hermitian_eig(v.a);
  const auto eig_c = hermitian_eig(v.c);
  const double scale = std::max(max_abs_eigenvalue(eig_a), max_abs_eigenvalue(eig_c));
  const double n = static_cast<double>(h.dim());
  const double atol = std::max(tol.zero_atol, std::sqrt(n * tol.rank_rtol) * scale);
  const double bnorm = v.b.frobenius_norm();
  const double bound = atol * (1.0 + bnorm);

  const ComplexMatrix pa = range_projector(v.a, tol).matrix();
  const ComplexMatrix pc = range_projector(v.c, tol).matrix();
  const double res_a = (v.b - pa * v.b).frobenius_norm();
  const double res_c = (v.b.adjoint() - pc * v.b.adjoint()).frobenius_norm();
  return res_a <= bound && res_c <= bound;
}

bool is_maximal_rank(const HermitianMatrix& h, const BlockPartition& p,
                     const TolerancePolicy& tol) {
  require_psd(h, tol, "is_maximal_rank");
  const BlockView v = split(h, p);
  const int rank_h = numerical_rank(hermitian_eig(h), tol);
  const int rank_a = numerical_rank(hermitian_eig(v.a), tol);
  const int rank_c = numerical_rank(hermitian_eig(v.c), tol);
  return rank_h == rank_a + rank_c;
}

double gendet(const HermitianMatrix& h, const TolerancePolicy& tol) {
  return gendet(hermitian_eig(h), tol);
}

double gendet(const EigenDecomposition& eig, const TolerancePolicy& tol) {
  tol.validate();
  const double threshold = tol.rank_rtol * max_abs_eigenvalue(eig);
  double det = 1.0;
  for (double lam : eig.eigenvalues) {
    if (std::abs(lam) > threshold) det *= lam;
  }
  return det;
}

GendetLimitEstimate gendet_limit(const HermitianMatrix& h, int r, std::vector<double> eps_sequence) {
  if (eps_sequence.empty()) {
    throw std::invalid_argument("gendet_limit: need at least one eps value");
  }
  for (double e : eps_sequence) {
    if (!(e > 0.0)) throw std::invalid_argument("gendet_limit: eps values must be positive");
  }
  const std::size_t n = h.dim();
  if (r < 0 || static_cast<std::size_t>(r) > n) {
    throw std::invalid_argument("gendet_limit: rank out of range");
  }
  std::sort(eps_sequence.begin(), eps_sequence.end(), std::greater<>());

  std::vector<double> f(eps_sequence.size());
  for (std::size_t i = 0; i < eps_sequence.size(); ++i) {
    const double eps = eps_sequence[i];
    ComplexMatrix shifted = h.matrix();
    for (std::size_t d = 0; d < n; ++d) shifted(d, d) += eps;
    const double det = lu_determinant(shifted).real();
    f[i] = det / std::pow(eps, static_cast<double>(n) - r);
  }

  GendetLimitEstimate out{};
  out.value = f.back();
  if (f.size() >= 2) {
    // f(eps) = L + a*eps + O(eps^2); eliminate the linear term from the
    // two smallest eps.
    const double e1 = eps_sequence[eps_sequence.size() - 2];
    const double e2 = eps_sequence[eps_sequence.size() - 1];
    out.extrapolated = (e1 * f.back() - e2 * f[f.size() - 2]) / (e1 - e2);
  } else {
    out.extrapolated = out.value;
  }
  if (f.size() >= 3) {
    const double d1 = f[f.size() - 3] - f[f.size() - 2];
    const double d2 = f[f.size() - 2] - f[f.size() - 1];
    out.ratio = d2 != 0.0 ? d1 / d2 : std::numeric_limits<double>::quiet_NaN();
  } else {
    out.ratio = std::numeric_limits<double>::quiet_NaN();
  }
  return out;
}

HermitianMatrix schur_complement(const HermitianMatrix& h, const BlockPartition& p,
                                 const TolerancePolicy& tol) {
  const BlockView v = split(h, p);
  const ComplexMatrix a_pinv = pinv(v.a, tol).matrix();
  return HermitianMatrix(v.c.matrix() - v.b.adjoint() * a_pinv * v.b);
}

FischerReport verify_fischer(const HermitianMatrix& h, const BlockPartition& p,
                             const TolerancePolicy& tol) {
  require_psd(h, tol, "verify_fischer");
  require_maximal_rank(h, p, tol, "verify_fischer");
  const BlockView v = split(h, p);

  FischerReport rep;
  rep.lhs = gendet(h, tol);
  rep.rhs = gendet(v.a, tol) * gendet(v.c, tol);
  rep.b_is_zero = v.b.frobenius_norm() <= tol.zero_atol;
  rep.holds = rep.lhs <= rep.rhs + kVerifyRtol * std::abs(rep.rhs) + tol.zero_atol;
  // det values span many orders of magnitude, so equality is relative to
  // rhs, with an absolute fallback when rhs vanishes.
  rep.equality = rep.rhs != 0.0 ? std::abs(rep.lhs - rep.rhs) <= kVerifyRtol * std::abs(rep.rhs)
                                : std::abs(rep.lhs - rep.rhs) <= tol.zero_atol;
  return rep;
}

SchurDetReport verify_schur_det(const HermitianMatrix& h, const BlockPartition& p,
                                const TolerancePolicy& tol) {
  require_psd(h, tol, "verify_schur_det");
  require_maximal_rank(h, p, tol, "verify_schur_det");
  const BlockView v = split(h, p);

  SchurDetReport rep;
  rep.lhs = gendet(h, tol);
  rep.rhs = gendet(v.a, tol) * gendet(schur_complement(h, p, tol), tol);
  rep.holds = std::abs(rep.lhs - rep.rhs) <=
              kVerifyRtol * std::max(std::abs(rep.lhs), std::abs(rep.rhs)) + tol.zero_atol;
  return rep;
}

HermitianMatrix banachiewicz_pinv(const HermitianMatrix& h, const BlockPartition& p,
                                  const TolerancePolicy& tol) {
  require_psd(h, tol, "banachiewicz_pinv");
  require_maximal_rank(h, p, tol, "banachiewicz_pinv");
  const BlockView v = split(h, p);
  const ComplexMatrix a_pinv = pinv(v.a, tol).matrix();
  const ComplexMatrix s_pinv = pinv(schur_complement(h, p, tol), tol).matrix();

  const ComplexMatrix ab = a_pinv * v.b;               // A+ B
  const ComplexMatrix x12 = Complex(-1.0) * (ab * s_pinv);
  const ComplexMatrix x11 = a_pinv + ab * s_pinv * ab.adjoint();
  return assemble(x11, x12, s_pinv);
}

bool nullspace_direct_sum_check(const HermitianMatrix& h, const BlockPartition& p,
                                const TolerancePolicy& tol) {
  require_psd(h, tol, "nullspace_direct_sum_check");
  const std::size_t n = h.dim();
  const double bound = std::sqrt(tol.rank_rtol) * h.frobenius_norm();

  auto embedded_null_residuals_ok = [&](const HermitianMatrix& block, std::size_t offset) {
    const EigenDecomposition eig = hermitian_eig(block);
    const double threshold = tol.rank_rtol * max_abs_eigenvalue(eig);
    const std::size_t m = block.dim();
    for (std::size_t key = 0; key < m; ++key) {
      if (std::abs(eig.eigenvalues[key]) > threshold) continue;
      std::vector<Complex> v(n);
      for (std::size_t i = 0; i < m; ++i) v[offset + i] = eig.vectors(i, key);
      const std::vector<Complex> hv = h.matrix() * v;
      double res = 0.0;
      for (const Complex& z : hv) res += std::norm(z);
      if (std::sqrt(res) > bound) return false;
    }
    return true;
  };

  const BlockView v = split(h, p);
  return embedded_null_residuals_ok(v.a, 0) && embedded_null_residuals_ok(v.c, p.k);
}

}  // namespace psdcomp
