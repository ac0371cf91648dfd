#include "psdcomp/completion.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace psdcomp {

namespace {

constexpr double kMaximalitySlack = 1e-9;
constexpr double kPinvZeroRtol = 1e-8;
// Admission threshold for perturbed matrices in the maximality search.
// A matrix admitted at the modeling tolerance psd_rtol may sit up to
// psd_rtol outside the PSD cone and carry a det gain of the same order,
// which would drown the slack below; admission is therefore pinned at
// the eigensolver noise floor instead.
constexpr double kStrictAdmissionRtol = 1e-13;

std::vector<int> sorted_concat(const std::vector<int>& a, const std::vector<int>& b) {
  return detail::sorted_union(a, b);
}

bool is_sorted_unique(const std::vector<int>& v) {
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (v[i - 1] >= v[i]) return false;
  }
  return true;
}

// Maximal-rank test for a (head | tail) split given as index lists;
// an empty side makes the condition trivially true.
bool maximal_rank_for_sets(const ComplexMatrix& entries, const std::vector<int>& head,
                           const std::vector<int>& tail, const TolerancePolicy& tol) {
  if (head.empty() || tail.empty()) return true;
  std::vector<int> layout = head;
  layout.insert(layout.end(), tail.begin(), tail.end());
  const HermitianMatrix h(entries.submatrix(layout, layout));
  return is_maximal_rank(h, BlockPartition{head.size(), tail.size()}, tol);
}

int rank_of_subset(const ComplexMatrix& entries, const std::vector<int>& idx,
                   const TolerancePolicy& tol) {
  if (idx.empty()) return 0;
  const HermitianMatrix h(entries.submatrix(idx, idx));
  return numerical_rank(hermitian_eig(h), tol);
}

}  // namespace

void TriPartition::validate(std::size_t n) const {
  for (const std::vector<int>* set : {&alpha_only, &gamma, &beta_only}) {
    if (!is_sorted_unique(*set)) {
      throw std::invalid_argument("TriPartition: index sets must be sorted and duplicate-free");
    }
    for (int v : *set) {
      if (v < 0 || static_cast<std::size_t>(v) >= n) {
        throw std::invalid_argument("TriPartition: index out of range");
      }
    }
  }
  if (!detail::sorted_intersection(alpha_only, gamma).empty() ||
      !detail::sorted_intersection(alpha_only, beta_only).empty() ||
      !detail::sorted_intersection(gamma, beta_only).empty()) {
    throw std::invalid_argument("TriPartition: index sets must be pairwise disjoint");
  }
}

ComplexMatrix complete_edge(const PartialHermitianMatrix& h, const TriPartition& t,
                            const TolerancePolicy& tol) {
  tol.validate();
  t.validate(h.dim());
  const std::vector<int> alpha = sorted_concat(t.alpha_only, t.gamma);
  const std::vector<int> beta = sorted_concat(t.gamma, t.beta_only);

  if (!h.block_fully_specified(alpha) || !h.block_fully_specified(beta)) {
    throw std::invalid_argument("complete_edge: H[alpha] and H[beta] must be fully specified");
  }
  if (!alpha.empty() && !is_psd(HermitianMatrix(h.entries().submatrix(alpha, alpha)), tol)) {
    throw std::invalid_argument("complete_edge: H[alpha] must be positive semidefinite");
  }
  if (!beta.empty() && !is_psd(HermitianMatrix(h.entries().submatrix(beta, beta)), tol)) {
    throw std::invalid_argument("complete_edge: H[beta] must be positive semidefinite");
  }

  if (t.gamma.empty()) {
    // Disconnected merge: the formula degenerates to an empty product.
    return ComplexMatrix(t.alpha_only.size(), t.beta_only.size());
  }
  const ComplexMatrix b = h.entries().submatrix(t.alpha_only, t.gamma);
  const ComplexMatrix d = h.entries().submatrix(t.gamma, t.beta_only);
  const HermitianMatrix c(h.entries().submatrix(t.gamma, t.gamma));
  return b * pinv(c, tol).matrix() * d;
}

CompletionReport complete(const PartialHermitianMatrix& p, const TolerancePolicy& tol) {
  tol.validate();
  const PatternGraph g = pattern_graph(p);
  const ChordalityResult chord = is_chordal(g);
  if (!chord.chordal) throw NotChordalError(chord.witness);

  const auto cliques = maximal_cliques(g, *chord.peo);
  for (const auto& clique : cliques) {
    const HermitianMatrix sub(p.entries().submatrix(clique, clique));
    if (!is_psd(sub, tol)) throw CliqueNotPsdError(clique);
  }
  const CliqueTree tree = clique_tree(cliques);

  PartialHermitianMatrix work = p;
  std::vector<MergeLogEntry> log;
  std::vector<char> clique_done(cliques.size(), 0);
  std::vector<int> merged;
  std::size_t next_root = 0;

  auto run_merge = [&](std::size_t fresh, std::optional<std::size_t> edge_index,
                       const std::vector<int>& separator) {
    const std::vector<int>& beta_clique = cliques[fresh];
    MergeLogEntry entry;
    entry.edge = edge_index;
    entry.separator = separator;

    TriPartition t;
    t.gamma = separator;
    t.alpha_only = detail::sorted_difference(merged, t.gamma);
    t.beta_only = detail::sorted_difference(beta_clique, t.gamma);
    entry.fill_rows = t.alpha_only.size();
    entry.fill_cols = t.beta_only.size();

    const ComplexMatrix x = complete_edge(work, t, tol);
    for (std::size_t r = 0; r < t.alpha_only.size(); ++r) {
      for (std::size_t c = 0; c < t.beta_only.size(); ++c) {
        if (work.specified(static_cast<std::size_t>(t.alpha_only[r]),
                           static_cast<std::size_t>(t.beta_only[c]))) {
          throw std::logic_error("complete: fill position is already specified");
        }
        work.set(t.alpha_only[r], t.beta_only[c], x(r, c));
      }
    }

    entry.hypotheses_ok = maximal_rank_for_sets(work.entries(), t.alpha_only, t.gamma, tol) &&
                          maximal_rank_for_sets(work.entries(), t.gamma, t.beta_only, tol);
    const std::vector<int> all = sorted_concat(sorted_concat(merged, t.gamma), t.beta_only);
    const int rank_union = rank_of_subset(work.entries(), all, tol);
    entry.rank_additive = rank_union == rank_of_subset(work.entries(), t.alpha_only, tol) +
                                            rank_of_subset(work.entries(), t.gamma, tol) +
                                            rank_of_subset(work.entries(), t.beta_only, tol);
    log.push_back(std::move(entry));
    merged = sorted_concat(merged, beta_clique);
    clique_done[fresh] = 1;
  };

  auto absorb_next_root = [&]() {
    const std::size_t root = tree.component_roots[next_root++];
    if (merged.empty()) {
      // Base block: nothing to fill yet.
      merged = cliques[root];
      clique_done[root] = 1;
      return;
    }
    run_merge(root, std::nullopt, {});
  };

  if (!tree.component_roots.empty()) absorb_next_root();
  for (std::size_t e : tree.merge_order) {
    const CliqueTreeEdge& edge = tree.edges[e];
    while (!clique_done[edge.a] && !clique_done[edge.b]) absorb_next_root();
    const std::size_t fresh = clique_done[edge.a] ? edge.b : edge.a;
    run_merge(fresh, e, edge.separator);
  }
  while (next_root < tree.component_roots.size()) absorb_next_root();

  CompletionReport report{work.to_hermitian()};
  report.merge_log = std::move(log);
  report.psd = is_psd(report.completed, tol);
  report.rank = numerical_rank(hermitian_eig(report.completed), tol);
  report.gendet_value = gendet(report.completed, tol);
  report.rank_additive = true;
  report.hypotheses_held = true;
  for (const MergeLogEntry& entry : report.merge_log) {
    report.rank_additive = report.rank_additive && entry.rank_additive;
    report.hypotheses_held = report.hypotheses_held && entry.hypotheses_ok;
  }
  const PinvZeroReport zero = verify_pinv_zero_pattern(p, report.completed, tol);
  report.pinv_zero_pattern_ok = zero.ok;

  if (!report.psd) report.warnings.push_back("completed matrix failed the PSD check");
  if (!report.hypotheses_held) {
    report.warnings.push_back("a merge step involved blocks that are not of maximal rank; "
                              "uniqueness guarantees do not apply");
  }
  if (!report.rank_additive) report.warnings.push_back("rank additivity failed at a merge step");
  if (!zero.ok) report.warnings.push_back("pseudoinverse is nonzero at an unspecified position");
  return report;
}

MaximalityReport verify_det_maximality(const PartialHermitianMatrix& p,
                                       const HermitianMatrix& completed,
                                       const TolerancePolicy& tol, int trials, double magnitude,
                                       std::uint64_t seed) {
  tol.validate();
  if (trials < 0 || magnitude < 0.0) {
    throw std::invalid_argument("verify_det_maximality: trials and magnitude must be nonnegative");
  }
  const auto positions = p.unspecified_positions();
  const int base_rank = numerical_rank(hermitian_eig(completed), tol);
  const double base_gendet = gendet(completed, tol);

  MaximalityReport rep;
  rep.trials_requested = trials;
  const int target_admissible = std::min(trials, 20);
  const int sample_cap = 50 * trials;

  std::mt19937_64 rng(seed);
  // Entrywise complex magnitude stays below `magnitude`.
  std::uniform_real_distribution<double> dist(-magnitude / std::sqrt(2.0),
                                              magnitude / std::sqrt(2.0));
  while (rep.samples_drawn < sample_cap &&
         (rep.samples_drawn < trials || rep.admissible < target_admissible)) {
    ++rep.samples_drawn;
    ComplexMatrix m = completed.matrix();
    for (const auto& [i, j] : positions) {
      const Complex delta(dist(rng), dist(rng));
      m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) += delta;
      m(static_cast<std::size_t>(j), static_cast<std::size_t>(i)) += std::conj(delta);
    }
    const HermitianMatrix perturbed(m);
    const EigenDecomposition eig = hermitian_eig(perturbed);
    if (eig.eigenvalues.back() < -kStrictAdmissionRtol * std::max(eig.eigenvalues.front(), 1.0)) {
      continue;
    }
    if (numerical_rank(eig, tol) != base_rank) continue;
    ++rep.admissible;
    const double val = gendet(eig, tol);
    rep.max_ratio = std::max(rep.max_ratio, val / base_gendet);
    if (val > base_gendet * (1.0 + kMaximalitySlack)) ++rep.violations;
  }
  rep.vacuous = rep.admissible == 0;
  return rep;
}

PinvZeroReport verify_pinv_zero_pattern(const PartialHermitianMatrix& p,
                                        const HermitianMatrix& completed,
                                        const TolerancePolicy& tol) {
  if (p.dim() != completed.dim()) {
    throw std::invalid_argument("verify_pinv_zero_pattern: dimension mismatch");
  }
  const HermitianMatrix hp = pinv(completed, tol);
  const double scale = std::max(hp.frobenius_norm(), 1e-300);

  PinvZeroReport rep;
  for (const auto& [i, j] : p.unspecified_positions()) {
    const double rel = std::abs(hp(static_cast<std::size_t>(i), static_cast<std::size_t>(j))) / scale;
    rep.max_rel = std::max(rep.max_rel, rel);
    if (rel > kPinvZeroRtol) {
      rep.ok = false;
      rep.violations.push_back({i, j});
    }
  }
  return rep;
}

HermitianMatrix explicit_block_pinv(const HermitianMatrix& h, const TriPartition& t,
                                    const TolerancePolicy& tol) {
  tol.validate();
  t.validate(h.dim());
  if (t.alpha_only.empty() || t.beta_only.empty()) {
    throw std::invalid_argument("explicit_block_pinv: alpha-gamma and beta-gamma must be nonempty");
  }
  if (t.alpha_only.size() + t.gamma.size() + t.beta_only.size() != h.dim()) {
    throw std::invalid_argument("explicit_block_pinv: partition must cover the matrix");
  }
  if (!is_psd(h, tol)) {
    throw std::invalid_argument("explicit_block_pinv: input must be positive semidefinite");
  }
  if (!maximal_rank_for_sets(h.matrix(), t.alpha_only, t.gamma, tol) ||
      !maximal_rank_for_sets(h.matrix(), t.gamma, t.beta_only, tol)) {
    throw std::invalid_argument("explicit_block_pinv: H[alpha] and H[beta] must be of maximal rank");
  }

  const std::size_t na = t.alpha_only.size();
  const std::size_t ng = t.gamma.size();
  const std::size_t nb = t.beta_only.size();
  const std::size_t n = h.dim();

  const ComplexMatrix a = h.matrix().submatrix(t.alpha_only, t.alpha_only);
  const ComplexMatrix e = h.matrix().submatrix(t.beta_only, t.beta_only);

  ComplexMatrix block(n, n);
  auto place = [&](std::size_t row0, std::size_t col0, const ComplexMatrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) block(row0 + i, col0 + j) = m(i, j);
  };

  if (ng == 0) {
    place(0, 0, pinv(HermitianMatrix(a), tol).matrix());
    place(na, na, pinv(HermitianMatrix(e), tol).matrix());
  } else {
    const ComplexMatrix b = h.matrix().submatrix(t.alpha_only, t.gamma);
    const ComplexMatrix d = h.matrix().submatrix(t.gamma, t.beta_only);
    const HermitianMatrix c(h.matrix().submatrix(t.gamma, t.gamma));
    const ComplexMatrix cp = pinv(c, tol).matrix();

    const ComplexMatrix schur_a = a - b * cp * b.adjoint();  // H[alpha]/C
    const ComplexMatrix schur_b = e - d.adjoint() * cp * d;  // H[beta]/C
    const ComplexMatrix p1 = pinv(HermitianMatrix(schur_a), tol).matrix();
    const ComplexMatrix p2 = pinv(HermitianMatrix(schur_b), tol).matrix();

    const ComplexMatrix xi =
        cp + cp * b.adjoint() * p1 * b * cp + cp * d * p2 * d.adjoint() * cp;

    place(0, 0, p1);
    place(0, na, Complex(-1.0) * (p1 * b * cp));
    place(na, 0, Complex(-1.0) * (cp * b.adjoint() * p1));
    place(na, na, xi);
    place(na, na + ng, Complex(-1.0) * (cp * d * p2));
    place(na + ng, na, Complex(-1.0) * (p2 * d.adjoint() * cp));
    place(na + ng, na + ng, p2);
    // Corner blocks stay zero.
  }

  std::vector<int> layout = t.alpha_only;
  layout.insert(layout.end(), t.gamma.begin(), t.gamma.end());
  layout.insert(layout.end(), t.beta_only.begin(), t.beta_only.end());
  ComplexMatrix global(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      global(static_cast<std::size_t>(layout[i]), static_cast<std::size_t>(layout[j])) = block(i, j);
  return HermitianMatrix(global);
}

bool rank_additivity_check(const HermitianMatrix& h, const TriPartition& t,
                           const TolerancePolicy& tol) {
  tol.validate();
  t.validate(h.dim());
  if (t.alpha_only.size() + t.gamma.size() + t.beta_only.size() != h.dim()) {
    throw std::invalid_argument("rank_additivity_check: partition must cover the matrix");
  }
  const int rank_h = numerical_rank(hermitian_eig(h), tol);
  return rank_h == rank_of_subset(h.matrix(), t.alpha_only, tol) +
                       rank_of_subset(h.matrix(), t.gamma, tol) +
                       rank_of_subset(h.matrix(), t.beta_only, tol);
}

HermitianMatrix symmetric_permute(const HermitianMatrix& h, std::span<const int> perm) {
  const std::size_t n = h.dim();
  if (perm.size() != n) throw std::invalid_argument("symmetric_permute: permutation length mismatch");
  return HermitianMatrix(h.matrix().submatrix(perm, perm));
}

PartialHermitianMatrix symmetric_permute(const PartialHermitianMatrix& p, std::span<const int> perm) {
  const std::size_t n = p.dim();
  if (perm.size() != n) throw std::invalid_argument("symmetric_permute: permutation length mismatch");
  std::vector<PartialHermitianMatrix::Entry> entries;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const auto pi = static_cast<std::size_t>(perm[i]);
      const auto pj = static_cast<std::size_t>(perm[j]);
      if (p.specified(pi, pj)) {
        entries.push_back({static_cast<int>(i), static_cast<int>(j), p.entry(pi, pj)});
      }
    }
  }
  return PartialHermitianMatrix(n, entries);
}

}  // namespace psdcomp
