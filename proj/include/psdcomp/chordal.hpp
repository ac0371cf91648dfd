#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "psdcomp/partial_matrix.hpp"

namespace psdcomp {

/// Undirected graph on matrix row indices: an edge marks a specified
/// off-diagonal entry. No self loops.
class PatternGraph {
public:
  explicit PatternGraph(std::size_t n) : n_(n), adj_(n * n, 0) {}

  std::size_t size() const { return n_; }
  bool edge(int i, int j) const { return adj_[static_cast<std::size_t>(i) * n_ + j] != 0; }
  void add_edge(int i, int j);
  std::vector<int> neighbors(int v) const;
  std::size_t edge_count() const;

private:
  std::size_t n_;
  std::vector<char> adj_;
};

struct EliminationOrder {
  std::vector<int> order;  // a permutation of 0..n-1
};

PatternGraph pattern_graph(const PartialHermitianMatrix& p);

/// Maximum cardinality search; ties broken towards the smallest vertex
/// index, so the result is deterministic.
EliminationOrder mcs_order(const PatternGraph& g);

struct ChordalityResult {
  bool chordal = false;
  std::optional<EliminationOrder> peo;  // set when chordal
  std::vector<int> witness;             // a chordless cycle (length >= 4) when not
};

/// Chordality via MCS: the reverse visit order is a perfect elimination
/// ordering exactly when the graph is chordal. On failure a chordless
/// cycle is extracted as a witness.
ChordalityResult is_chordal(const PatternGraph& g);

/// The maximal cliques of a chordal graph, each sorted ascending, the
/// list sorted lexicographically. Throws if `peo` is not a perfect
/// elimination ordering of g.
std::vector<std::vector<int>> maximal_cliques(const PatternGraph& g, const EliminationOrder& peo);

struct CliqueTreeEdge {
  std::size_t a = 0;  // clique indices, a < b
  std::size_t b = 0;
  std::vector<int> separator;
};

/// Maximum-weight spanning forest of the clique-intersection graph,
/// with a breadth-first merge schedule per connected component.
/// The full intersection graph is kept for inspection.
struct CliqueTree {
  std::vector<std::vector<int>> cliques;
  std::vector<CliqueTreeEdge> edges;
  std::vector<std::size_t> merge_order;          // indices into edges, BFS order
  std::vector<std::size_t> component_roots;      // clique index per component, in processing order
  std::vector<CliqueTreeEdge> intersection_edges;
};

CliqueTree clique_tree(const std::vector<std::vector<int>>& cliques);

namespace detail {
std::vector<int> sorted_intersection(const std::vector<int>& a, const std::vector<int>& b);
std::vector<int> sorted_difference(const std::vector<int>& a, const std::vector<int>& b);
std::vector<int> sorted_union(const std::vector<int>& a, const std::vector<int>& b);
}  // namespace detail

}  // namespace psdcomp
