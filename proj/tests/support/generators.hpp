#pragma once

// Shared random test-data generators. All take the RNG by reference so
// each test controls its own seed.

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "psdcomp/eig.hpp"
#include "psdcomp/hermitian.hpp"
#include "psdcomp/semidefinite.hpp"

namespace psdcomp::testing {

using Rng = std::mt19937_64;

inline ComplexMatrix random_complex_matrix(Rng& rng, std::size_t rows, std::size_t cols) {
  std::normal_distribution<double> dist(0.0, 1.0);
  ComplexMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = Complex(dist(rng), dist(rng));
  return m;
}

inline HermitianMatrix random_hermitian(Rng& rng, std::size_t n) {
  const ComplexMatrix g = random_complex_matrix(rng, n, n);
  ComplexMatrix m = g;
  m += g.adjoint();
  m *= 0.5;
  return HermitianMatrix(m);
}

// Orthonormal columns by modified Gram-Schmidt with one
// re-orthogonalization pass.
inline ComplexMatrix random_unitary(Rng& rng, std::size_t n) {
  ComplexMatrix g = random_complex_matrix(rng, n, n);
  for (std::size_t col = 0; col < n; ++col) {
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t prev = 0; prev < col; ++prev) {
        Complex proj{};
        for (std::size_t i = 0; i < n; ++i) proj += std::conj(g(i, prev)) * g(i, col);
        for (std::size_t i = 0; i < n; ++i) g(i, col) -= proj * g(i, prev);
      }
    }
    double norm = 0.0;
    for (std::size_t i = 0; i < n; ++i) norm += std::norm(g(i, col));
    norm = std::sqrt(norm);
    if (norm < 1e-8) throw std::runtime_error("random_unitary: degenerate column");
    for (std::size_t i = 0; i < n; ++i) g(i, col) /= norm;
  }
  return g;
}

// Q diag(eigs) Q* for a random unitary Q.
inline HermitianMatrix random_hermitian_with_eigenvalues(Rng& rng, const std::vector<double>& eigs) {
  const std::size_t n = eigs.size();
  const ComplexMatrix q = random_unitary(rng, n);
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Complex s{};
      for (std::size_t k = 0; k < n; ++k) s += q(i, k) * eigs[k] * std::conj(q(j, k));
      m(i, j) = s;
    }
  return HermitianMatrix(m);
}

// Gram matrix G G* with G of shape n x r; PSD of rank min(n, r).
inline HermitianMatrix random_gram(Rng& rng, std::size_t n, std::size_t r) {
  const ComplexMatrix g = random_complex_matrix(rng, n, r);
  return HermitianMatrix(g * g.adjoint());
}

inline HermitianMatrix random_psd_rank(Rng& rng, std::size_t n, std::size_t rank,
                                       double lo = 0.5, double hi = 2.0) {
  std::uniform_real_distribution<double> dist(lo, hi);
  std::vector<double> eigs(n, 0.0);
  for (std::size_t i = 0; i < rank; ++i) eigs[i] = dist(rng);
  return random_hermitian_with_eigenvalues(rng, eigs);
}

// Maximal-rank PSD sample: positive definite cores on random subspaces
// for A and C, B confined to their ranges and scaled down until the
// assembled matrix passes the PSD check (one extra halving for margin).
// Rejected and resampled if the post-hoc maximal-rank check fails.
inline HermitianMatrix random_maximal_rank(Rng& rng, std::size_t n, std::size_t k,
                                           std::size_t rank_a, std::size_t rank_c,
                                           const TolerancePolicy& tol = {},
                                           bool force_b_zero = false) {
  const std::size_t l = n - k;
  if (k < 1 || l < 1 || rank_a > k || rank_c > l) {
    throw std::invalid_argument("random_maximal_rank: inconsistent shape");
  }
  const BlockPartition part{k, l};
  for (int attempt = 0; attempt < 64; ++attempt) {
    const HermitianMatrix a = random_psd_rank(rng, k, rank_a);
    const HermitianMatrix c = random_psd_rank(rng, l, rank_c);
    ComplexMatrix b(k, l);
    if (!force_b_zero && rank_a > 0 && rank_c > 0) {
      const ComplexMatrix pa = range_projector(a, tol).matrix();
      const ComplexMatrix pc = range_projector(c, tol).matrix();
      b = pa * random_complex_matrix(rng, k, l) * pc;
    }
    double beta = 1.0;
    for (int halving = 0; halving < 60; ++halving) {
      const HermitianMatrix h = assemble(a.matrix(), beta * b, c.matrix());
      if (is_psd(h, tol)) {
        const HermitianMatrix margin = assemble(a.matrix(), (0.5 * beta) * b, c.matrix());
        if (is_maximal_rank(margin, part, tol)) return margin;
        break;
      }
      beta *= 0.5;
    }
  }
  throw std::runtime_error("random_maximal_rank: no sample accepted");
}

}  // namespace psdcomp::testing
