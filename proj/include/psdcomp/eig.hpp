#pragma once

#include <vector>

#include "psdcomp/hermitian.hpp"

namespace psdcomp {

/// Spectral factorization H = U diag(eigenvalues) U*.
/// Eigenvalues are real and sorted descending; the columns of `vectors`
/// are the matching orthonormal eigenvectors.
struct EigenDecomposition {
  std::vector<double> eigenvalues;
  ComplexMatrix vectors;
};

/// Full eigendecomposition by cyclic complex Jacobi rotations.
/// Sweeps until the off-diagonal Frobenius mass drops below
/// 1e-14 * ||H||_F, capped at 100 sweeps; throws std::runtime_error if
/// the cap is hit.
EigenDecomposition hermitian_eig(const HermitianMatrix& h);

/// Count of eigenvalues with |lambda| above rank_rtol times the largest
/// |eigenvalue|. Zero matrix has rank 0.
int numerical_rank(const EigenDecomposition& eig, const TolerancePolicy& tol);

/// Moore-Penrose inverse: reciprocate eigenvalues above the rank
/// threshold, zero the rest.
HermitianMatrix pinv(const HermitianMatrix& h, const TolerancePolicy& tol);

/// True iff lambda_min >= -psd_rtol * max(lambda_max, 1).
bool is_psd(const HermitianMatrix& h, const TolerancePolicy& tol);

/// Orthogonal projector onto the range: P = H * pinv(H).
HermitianMatrix range_projector(const HermitianMatrix& h, const TolerancePolicy& tol);

}  // namespace psdcomp
