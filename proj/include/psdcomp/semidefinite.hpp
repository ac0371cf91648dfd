#pragma once

#include <vector>

#include "psdcomp/eig.hpp"
#include "psdcomp/hermitian.hpp"

namespace psdcomp {

/// Two-block split of an n x n matrix into a leading k x k block and a
/// trailing l x l block, k >= 1, l >= 1, k + l = n.
struct BlockPartition {
  std::size_t k = 0;
  std::size_t l = 0;

  std::size_t n() const { return k + l; }
  void validate_for(std::size_t dim) const;
};

/// Extracted blocks [[A, B], [B*, C]] of a Hermitian matrix.
struct BlockView {
  HermitianMatrix a;
  ComplexMatrix b;
  HermitianMatrix c;
};

BlockView split(const HermitianMatrix& h, const BlockPartition& p);

/// [[A, B], [B*, C]] assembled back into one Hermitian matrix.
HermitianMatrix assemble(const ComplexMatrix& a, const ComplexMatrix& b, const ComplexMatrix& c);

/// Range inclusion R(B) in R(A) and R(B*) in R(C), tested through the
/// range projectors. The acceptance threshold scales with
/// sqrt(n * rank_rtol) times the spectral scale of A and C: eigenvector
/// directions truncated by the rank threshold can leak at most
/// sqrt(lambda_trunc * lambda_max) into the residual when the matrix is
/// PSD.
bool column_inclusion_holds(const HermitianMatrix& h, const BlockPartition& p,
                            const TolerancePolicy& tol);

/// N(H) = N(A) + N(C), decided as rank(H) == rank(A) + rank(C).
/// Requires PSD input.
bool is_maximal_rank(const HermitianMatrix& h, const BlockPartition& p,
                     const TolerancePolicy& tol);

/// Generalized determinant: the product of the eigenvalues above the
/// rank threshold; 1 when the numerical rank is 0. Defined for any
/// Hermitian input; equals det(H) at full rank.
double gendet(const HermitianMatrix& h, const TolerancePolicy& tol);
double gendet(const EigenDecomposition& eig, const TolerancePolicy& tol);

struct GendetLimitEstimate {
  double value;         ///< det(H + eps I) / eps^(n-r) at the smallest eps
  double extrapolated;  ///< linear-order Richardson step from the two smallest eps
  double ratio;         ///< deviation ratio over the three largest eps (NaN if fewer)
};

/// Evaluates det(H + eps I) / eps^(n-r) at the given eps values via LU
/// determinants (no eigendecomposition), as an oracle for gendet.
/// r must be numerical_rank(H).
GendetLimitEstimate gendet_limit(const HermitianMatrix& h, int r,
                                 std::vector<double> eps_sequence = {1e-3, 1e-4, 1e-5});

/// Generalized Schur complement H/A = C - B* A^+ B.
HermitianMatrix schur_complement(const HermitianMatrix& h, const BlockPartition& p,
                                 const TolerancePolicy& tol);

struct FischerReport {
  double lhs = 0.0;  ///< gendet(H)
  double rhs = 0.0;  ///< gendet(A) * gendet(C)
  bool b_is_zero = false;
  bool holds = false;
  bool equality = false;
};

/// Checks gendet(H) <= gendet(A) * gendet(C) with equality iff B = 0.
/// Requires PSD input of maximal rank.
FischerReport verify_fischer(const HermitianMatrix& h, const BlockPartition& p,
                             const TolerancePolicy& tol);

struct SchurDetReport {
  double lhs = 0.0;  ///< gendet(H)
  double rhs = 0.0;  ///< gendet(A) * gendet(H/A)
  bool holds = false;
};

/// Checks gendet(H) = gendet(A) * gendet(H/A) to relative 1e-7.
/// Requires PSD input of maximal rank.
SchurDetReport verify_schur_det(const HermitianMatrix& h, const BlockPartition& p,
                                const TolerancePolicy& tol);

/// Block form of the Moore-Penrose inverse,
///   [[A+ + A+ B (H/A)+ B* A+,  -A+ B (H/A)+],
///    [-(H/A)+ B* A+,            (H/A)+     ]],
/// valid for PSD input of maximal rank.
HermitianMatrix banachiewicz_pinv(const HermitianMatrix& h, const BlockPartition& p,
                                  const TolerancePolicy& tol);

/// Verifies H (w + 0) ~ 0 over a nullspace basis w of A and H (0 + u) ~ 0
/// over a basis u of C. Requires PSD input.
bool nullspace_direct_sum_check(const HermitianMatrix& h, const BlockPartition& p,
                                const TolerancePolicy& tol);

}  // namespace psdcomp
