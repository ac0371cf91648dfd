#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "psdcomp/chordal.hpp"
#include "psdcomp/partial_matrix.hpp"
#include "psdcomp/semidefinite.hpp"

namespace psdcomp {

/// Index-set split (alpha - gamma, gamma, beta - gamma) of a merge
/// between overlapping blocks alpha and beta. Sets are sorted global
/// indices and pairwise disjoint; gamma may be empty only when alpha
/// and beta come from different connected components.
struct TriPartition {
  std::vector<int> alpha_only;
  std::vector<int> gamma;
  std::vector<int> beta_only;

  void validate(std::size_t n) const;
};

class NotChordalError : public std::runtime_error {
public:
  explicit NotChordalError(std::vector<int> cycle_in)
      : std::runtime_error("completion requires a chordal specification pattern"),
        cycle(std::move(cycle_in)) {}
  std::vector<int> cycle;  // chordless cycle witness, 0-based vertices
};

class CliqueNotPsdError : public std::runtime_error {
public:
  explicit CliqueNotPsdError(std::vector<int> clique_in)
      : std::runtime_error("clique submatrix is not positive semidefinite"),
        clique(std::move(clique_in)) {}
  std::vector<int> clique;  // 0-based vertices
};

/// Fill block for one merge: X = B C^+ D with B = H[alpha-gamma, gamma],
/// C = H[gamma], D = H[gamma, beta-gamma]. Both H[alpha] and H[beta]
/// must be fully specified and PSD. An empty gamma yields a zero block.
ComplexMatrix complete_edge(const PartialHermitianMatrix& h, const TriPartition& t,
                            const TolerancePolicy& tol);

struct MergeLogEntry {
  std::optional<std::size_t> edge;  // clique-tree edge index; nullopt for component roots
  std::vector<int> separator;
  std::size_t fill_rows = 0;
  std::size_t fill_cols = 0;
  bool hypotheses_ok = true;  // H[alpha], H[beta] of maximal rank at this step
  bool rank_additive = true;  // rank H = rank A + rank C + rank E after the fill
};

struct PinvZeroReport {
  bool ok = true;
  std::vector<std::pair<int, int>> violations;  // 0-based positions
  double max_rel = 0.0;  // max |H+(i,j)| / ||H+||_F over originally-unspecified positions
};

struct CompletionReport {
  HermitianMatrix completed;
  bool psd = false;
  int rank = 0;
  bool rank_additive = false;
  bool pinv_zero_pattern_ok = false;
  double gendet_value = 0.0;
  bool hypotheses_held = false;
  std::vector<MergeLogEntry> merge_log;
  std::vector<std::string> warnings;
};

/// Chordal block completion: processes the clique-tree merge schedule,
/// filling each cross block with complete_edge. Specified entries are
/// never touched. Throws NotChordalError / CliqueNotPsdError when the
/// pattern or the data disqualifies the input; rank and inverse
/// diagnostics are reported, not fatal.
CompletionReport complete(const PartialHermitianMatrix& p, const TolerancePolicy& tol);

struct MaximalityReport {
  int trials_requested = 0;
  int samples_drawn = 0;
  int admissible = 0;  // perturbations that stayed PSD with unchanged rank
  int violations = 0;  // admissible with gendet above the completion's (beyond slack)
  bool vacuous = false;
  double max_ratio = 0.0;  // max gendet(perturbed) / gendet(completed) among admissible
};

/// Randomized check that no perturbation of the filled entries beats the
/// completion's generalized determinant while staying PSD with the same
/// rank. Perturbations are admitted as PSD only up to the eigensolver
/// noise floor (not up to psd_rtol: a matrix that far outside the cone
/// can carry a spurious det gain of the same order as the slack).
/// Resamples up to 50x the requested trials until at least
/// min(trials, 20) admissible perturbations are seen; marks the result
/// vacuous if none are found.
MaximalityReport verify_det_maximality(const PartialHermitianMatrix& p,
                                       const HermitianMatrix& completed,
                                       const TolerancePolicy& tol, int trials, double magnitude,
                                       std::uint64_t seed = 20250901);

/// Checks that pinv(completed) vanishes (relative to its Frobenius norm)
/// at every originally-unspecified position.
PinvZeroReport verify_pinv_zero_pattern(const PartialHermitianMatrix& p,
                                        const HermitianMatrix& completed,
                                        const TolerancePolicy& tol);

/// The closed-form Moore-Penrose inverse of a completed merge, assembled
/// from (H[alpha]/C)^+, (H[beta]/C)^+ and C^+ with zero corner blocks.
HermitianMatrix explicit_block_pinv(const HermitianMatrix& h, const TriPartition& t,
                                    const TolerancePolicy& tol);

/// rank H == rank H[alpha-gamma] + rank H[gamma] + rank H[beta-gamma].
/// Reports false (without error) when the hypotheses behind it fail.
bool rank_additivity_check(const HermitianMatrix& h, const TriPartition& t,
                           const TolerancePolicy& tol);

/// result(i, j) = input(perm[i], perm[j]).
HermitianMatrix symmetric_permute(const HermitianMatrix& h, std::span<const int> perm);
PartialHermitianMatrix symmetric_permute(const PartialHermitianMatrix& p, std::span<const int> perm);

}  // namespace psdcomp
