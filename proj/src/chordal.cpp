#include "psdcomp/chordal.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace psdcomp {

namespace detail {

std::vector<int> sorted_intersection(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<int> sorted_difference(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<int> sorted_union(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace detail

void PatternGraph::add_edge(int i, int j) {
  if (i < 0 || j < 0 || static_cast<std::size_t>(i) >= n_ || static_cast<std::size_t>(j) >= n_) {
    throw std::invalid_argument("PatternGraph: vertex out of range");
  }
  if (i == j) throw std::invalid_argument("PatternGraph: self loops are not allowed");
  adj_[static_cast<std::size_t>(i) * n_ + j] = 1;
  adj_[static_cast<std::size_t>(j) * n_ + i] = 1;
}

std::vector<int> PatternGraph::neighbors(int v) const {
  std::vector<int> out;
  for (std::size_t j = 0; j < n_; ++j) {
    if (adj_[static_cast<std::size_t>(v) * n_ + j]) out.push_back(static_cast<int>(j));
  }
  return out;
}

std::size_t PatternGraph::edge_count() const {
  std::size_t c = 0;
  for (char b : adj_) c += static_cast<std::size_t>(b);
  return c / 2;
}

PatternGraph pattern_graph(const PartialHermitianMatrix& p) {
  const std::size_t n = p.dim();
  PatternGraph g(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (p.specified(i, j)) g.add_edge(static_cast<int>(i), static_cast<int>(j));
  return g;
}

EliminationOrder mcs_order(const PatternGraph& g) {
  const std::size_t n = g.size();
  std::vector<int> weight(n, 0);
  std::vector<char> visited(n, 0);
  std::vector<int> order;
  order.reserve(n);
  for (std::size_t step = 0; step < n; ++step) {
    int best = -1;
    for (std::size_t v = 0; v < n; ++v) {
      if (visited[v]) continue;
      if (best < 0 || weight[v] > weight[best]) best = static_cast<int>(v);
    }
    visited[best] = 1;
    order.push_back(best);
    for (int u : g.neighbors(best)) {
      if (!visited[u]) ++weight[u];
    }
  }
  return EliminationOrder{std::move(order)};
}

namespace {

// Position-indexed PEO test: every vertex's later neighbors must be
// pairwise adjacent. Returns the first failing triple (v, p, w) with
// p, w non-adjacent, or nullopt when the order is perfect.
std::optional<std::array<int, 3>> find_peo_violation(const PatternGraph& g,
                                                     const std::vector<int>& order) {
  const std::size_t n = g.size();
  std::vector<int> pos(n);
  for (std::size_t idx = 0; idx < n; ++idx) pos[static_cast<std::size_t>(order[idx])] = static_cast<int>(idx);
  for (std::size_t idx = 0; idx < n; ++idx) {
    const int v = order[idx];
    std::vector<int> later;
    for (int u : g.neighbors(v)) {
      if (pos[static_cast<std::size_t>(u)] > static_cast<int>(idx)) later.push_back(u);
    }
    for (std::size_t a = 0; a < later.size(); ++a)
      for (std::size_t b = a + 1; b < later.size(); ++b)
        if (!g.edge(later[a], later[b])) return std::array<int, 3>{v, later[a], later[b]};
  }
  return std::nullopt;
}

// Chordless cycle through v, p, w where p, w are neighbors of v and not
// adjacent: a shortest p-w path avoiding v and the rest of N(v) closes
// into an induced cycle of length >= 4. Returns empty if no such path.
std::vector<int> chordless_cycle_through(const PatternGraph& g, int v, int p, int w) {
  const std::size_t n = g.size();
  std::vector<char> blocked(n, 0);
  blocked[static_cast<std::size_t>(v)] = 1;
  for (int u : g.neighbors(v)) blocked[static_cast<std::size_t>(u)] = 1;
  blocked[static_cast<std::size_t>(p)] = 0;
  blocked[static_cast<std::size_t>(w)] = 0;

  std::vector<int> parent(n, -1);
  std::deque<int> queue{p};
  std::vector<char> seen(n, 0);
  seen[static_cast<std::size_t>(p)] = 1;
  while (!queue.empty()) {
    const int cur = queue.front();
    queue.pop_front();
    if (cur == w) break;
    for (int u : g.neighbors(cur)) {
      if (blocked[static_cast<std::size_t>(u)] || seen[static_cast<std::size_t>(u)]) continue;
      seen[static_cast<std::size_t>(u)] = 1;
      parent[static_cast<std::size_t>(u)] = cur;
      queue.push_back(u);
    }
  }
  if (!seen[static_cast<std::size_t>(w)]) return {};
  std::vector<int> cycle{v};
  for (int cur = w; cur != -1; cur = parent[static_cast<std::size_t>(cur)]) cycle.push_back(cur);
  std::reverse(cycle.begin() + 1, cycle.end());  // v, p, ..., w
  return cycle;
}

std::vector<int> find_witness_cycle(const PatternGraph& g, const std::array<int, 3>& hint) {
  auto cycle = chordless_cycle_through(g, hint[0], hint[1], hint[2]);
  if (!cycle.empty()) return cycle;
  const std::size_t n = g.size();
  for (std::size_t v = 0; v < n; ++v) {
    const std::vector<int> nb = g.neighbors(static_cast<int>(v));
    for (std::size_t a = 0; a < nb.size(); ++a) {
      for (std::size_t b = a + 1; b < nb.size(); ++b) {
        if (g.edge(nb[a], nb[b])) continue;
        cycle = chordless_cycle_through(g, static_cast<int>(v), nb[a], nb[b]);
        if (!cycle.empty()) return cycle;
      }
    }
  }
  return {};
}

}  // namespace

ChordalityResult is_chordal(const PatternGraph& g) {
  std::vector<int> order = mcs_order(g).order;
  std::reverse(order.begin(), order.end());
  const auto violation = find_peo_violation(g, order);
  if (!violation) {
    ChordalityResult res;
    res.chordal = true;
    res.peo = EliminationOrder{std::move(order)};
    return res;
  }
  ChordalityResult res;
  res.chordal = false;
  res.witness = find_witness_cycle(g, *violation);
  if (res.witness.size() < 4) {
    throw std::logic_error("is_chordal: failed to extract a witness cycle");
  }
  return res;
}

std::vector<std::vector<int>> maximal_cliques(const PatternGraph& g, const EliminationOrder& peo) {
  const std::size_t n = g.size();
  const std::vector<int>& order = peo.order;
  {
    std::vector<char> seen(n, 0);
    if (order.size() != n) throw std::invalid_argument("maximal_cliques: order has wrong length");
    for (int v : order) {
      if (v < 0 || static_cast<std::size_t>(v) >= n || seen[static_cast<std::size_t>(v)]) {
        throw std::invalid_argument("maximal_cliques: order is not a permutation");
      }
      seen[static_cast<std::size_t>(v)] = 1;
    }
  }
  if (find_peo_violation(g, order)) {
    throw std::invalid_argument("maximal_cliques: order is not a perfect elimination ordering");
  }

  std::vector<int> pos(n);
  for (std::size_t idx = 0; idx < n; ++idx) pos[static_cast<std::size_t>(order[idx])] = static_cast<int>(idx);

  std::vector<std::vector<int>> candidates;
  candidates.reserve(n);
  for (std::size_t idx = 0; idx < n; ++idx) {
    const int v = order[idx];
    std::vector<int> clique{v};
    for (int u : g.neighbors(v)) {
      if (pos[static_cast<std::size_t>(u)] > static_cast<int>(idx)) clique.push_back(u);
    }
    std::sort(clique.begin(), clique.end());
    candidates.push_back(std::move(clique));
  }

  std::vector<std::vector<int>> result;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < candidates.size() && maximal; ++j) {
      if (i == j || candidates[j].size() < candidates[i].size()) continue;
      if (candidates[j].size() == candidates[i].size() && candidates[j] == candidates[i] && j < i) {
        maximal = false;  // duplicate, keep the first
        continue;
      }
      if (candidates[j] == candidates[i]) continue;
      maximal = !std::includes(candidates[j].begin(), candidates[j].end(), candidates[i].begin(),
                               candidates[i].end());
    }
    if (maximal) result.push_back(candidates[i]);
  }
  std::sort(result.begin(), result.end());
  result.erase(std::unique(result.begin(), result.end()), result.end());
  return result;
}

CliqueTree clique_tree(const std::vector<std::vector<int>>& cliques) {
  CliqueTree tree;
  tree.cliques = cliques;
  const std::size_t m = cliques.size();

  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      auto sep = detail::sorted_intersection(cliques[i], cliques[j]);
      if (!sep.empty()) tree.intersection_edges.push_back({i, j, std::move(sep)});
    }
  }

  // Kruskal on weight = |separator|, ties broken by clique index pair.
  std::vector<std::size_t> by_weight(tree.intersection_edges.size());
  std::iota(by_weight.begin(), by_weight.end(), 0);
  std::stable_sort(by_weight.begin(), by_weight.end(), [&](std::size_t x, std::size_t y) {
    return tree.intersection_edges[x].separator.size() > tree.intersection_edges[y].separator.size();
  });

  std::vector<std::size_t> root(m);
  std::iota(root.begin(), root.end(), 0);
  auto find = [&](std::size_t x) {
    while (root[x] != x) x = root[x] = root[root[x]];
    return x;
  };
  for (std::size_t e : by_weight) {
    const auto& edge = tree.intersection_edges[e];
    const std::size_t ra = find(edge.a), rb = find(edge.b);
    if (ra == rb) continue;
    root[ra] = rb;
    tree.edges.push_back(edge);
  }

  // BFS schedule per component, components in order of their smallest
  // clique index, neighbors in ascending clique order.
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(m);  // (other, edge index)
  for (std::size_t e = 0; e < tree.edges.size(); ++e) {
    adj[tree.edges[e].a].push_back({tree.edges[e].b, e});
    adj[tree.edges[e].b].push_back({tree.edges[e].a, e});
  }
  for (auto& lst : adj) std::sort(lst.begin(), lst.end());

  std::vector<char> visited(m, 0);
  for (std::size_t start = 0; start < m; ++start) {
    if (visited[start]) continue;
    tree.component_roots.push_back(start);
    visited[start] = 1;
    std::deque<std::size_t> queue{start};
    while (!queue.empty()) {
      const std::size_t cur = queue.front();
      queue.pop_front();
      for (const auto& [next, e] : adj[cur]) {
        if (visited[next]) continue;
        visited[next] = 1;
        tree.merge_order.push_back(e);
        queue.push_back(next);
      }
    }
  }
  return tree;
}

}  // namespace psdcomp
