#pragma once

// Fixture graphs and brute-force oracles shared by the unit and acceptance
// tests. Oracles here deliberately avoid the library's metric code paths.

#include <cmath>
#include <map>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "labelflow/graph.hpp"
#include "labelflow/types.hpp"

namespace labelflow::testing {

inline Graph make_graph(std::size_t n, std::initializer_list<std::pair<NodeId, NodeId>> edges) {
  std::vector<Edge> list;
  for (auto [u, v] : edges) list.push_back({u, v});
  return Graph::from_edges(n, list);
}

inline Graph triangle() { return make_graph(3, {{0, 1}, {1, 2}, {0, 2}}); }

inline Graph path3() { return make_graph(3, {{0, 1}, {1, 2}}); }

inline Graph star(std::size_t leaves) {
  std::vector<Edge> e;
  for (NodeId i = 1; i <= leaves; ++i) e.push_back({0, i});
  return Graph::from_edges(leaves + 1, e);
}

inline Graph cycle(std::size_t n) {
  std::vector<Edge> e;
  for (NodeId i = 0; i < n; ++i) e.push_back({i, static_cast<NodeId>((i + 1) % n)});
  return Graph::from_edges(n, e);
}

inline Graph complete(std::size_t n) {
  std::vector<Edge> e;
  for (NodeId i = 0; i < n; ++i)
    for (NodeId j = i + 1; j < n; ++j) e.push_back({i, j});
  return Graph::from_edges(n, e);
}

inline Graph two_disjoint_triangles() {
  return make_graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
}

/// Triangles {0,1,2} and {3,4,5} joined by the bridge 2-3.
inline Graph two_triangles_bridged() {
  return make_graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {2, 3}});
}

/// Cliques {0..4} and {5..9} joined by the bridge 4-5.
inline Graph two_cliques_bridged(std::size_t size = 5) {
  std::vector<Edge> e;
  for (NodeId base : {NodeId{0}, static_cast<NodeId>(size)})
    for (NodeId i = 0; i < size; ++i)
      for (NodeId j = i + 1; j < size; ++j) e.push_back({base + i, base + j});
  e.push_back({static_cast<NodeId>(size - 1), static_cast<NodeId>(size)});
  return Graph::from_edges(2 * size, e);
}

/// 3-regular graph: the cube Q3.
inline Graph cube() {
  std::vector<Edge> e;
  for (NodeId v = 0; v < 8; ++v)
    for (NodeId bit : {1u, 2u, 4u})
      if (v < (v ^ bit)) e.push_back({v, v ^ bit});
  return Graph::from_edges(8, e);
}

/// G(n, p) with a fixed seed.
inline Graph erdos_renyi(std::size_t n, double p, std::uint64_t seed) {
  Rng rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> e;
  for (NodeId i = 0; i < n; ++i)
    for (NodeId j = i + 1; j < n; ++j)
      if (coin(rng)) e.push_back({i, j});
  return Graph::from_edges(n, e);
}

/// Modularity by the pair-sum definition over the dense adjacency matrix.
inline double brute_force_modularity(const Graph& g, const std::vector<Label>& part) {
  const std::size_t n = g.node_count();
  std::vector<std::vector<int>> adj(n, std::vector<int>(n, 0));
  std::vector<double> deg(n, 0.0);
  double two_m = 0.0;
  for (NodeId i = 0; i < n; ++i)
    for (NodeId j = 0; j < n; ++j)
      if (g.has_edge(i, j)) {
        adj[i][j] = 1;
        deg[i] += 1.0;
        two_m += 1.0;
      }
  double q = 0.0;
  for (NodeId i = 0; i < n; ++i)
    for (NodeId j = 0; j < n; ++j)
      if (part[i] == part[j]) q += adj[i][j] - deg[i] * deg[j] / two_m;
  return q / two_m;
}

/// NMI = 2 I / (H_A + H_B) from an explicit contingency table (natural logs).
inline double contingency_nmi(const std::vector<Label>& a, const std::vector<Label>& b) {
  const double n = static_cast<double>(a.size());
  std::map<std::pair<Label, Label>, double> joint;
  std::map<Label, double> pa, pb;
  for (std::size_t i = 0; i < a.size(); ++i) {
    joint[{a[i], b[i]}] += 1.0 / n;
    pa[a[i]] += 1.0 / n;
    pb[b[i]] += 1.0 / n;
  }
  double ha = 0.0, hb = 0.0, mi = 0.0;
  for (auto [k, p] : pa) ha -= p * std::log(p);
  for (auto [k, p] : pb) hb -= p * std::log(p);
  for (auto [k, p] : joint) mi += p * std::log(p / (pa[k.first] * pb[k.second]));
  if (pa.size() == 1 && pb.size() == 1) return 1.0;
  if (pa.size() == 1 || pb.size() == 1) return 0.0;
  return 2.0 * mi / (ha + hb);
}

/// Calls f(labels) for every set partition of {0..n-1} (restricted growth strings).
template <class F>
void for_each_partition(std::size_t n, F&& f) {
  std::vector<Label> rgs(n, 0);
  std::vector<Label> maxima(n, 0);
  while (true) {
    f(rgs);
    std::size_t i = n;
    while (i > 1) {
      --i;
      if (rgs[i] <= maxima[i - 1]) {
        ++rgs[i];
        maxima[i] = std::max(maxima[i - 1], rgs[i]);
        for (std::size_t j = i + 1; j < n; ++j) {
          rgs[j] = 0;
          maxima[j] = maxima[i];
        }
        goto next;
      }
    }
    return;
  next:;
  }
}

/// Calls f(graph) for every connected simple graph on n labeled nodes.
template <class F>
void for_each_connected_graph(std::size_t n, F&& f) {
  std::vector<std::pair<NodeId, NodeId>> slots;
  for (NodeId i = 0; i < n; ++i)
    for (NodeId j = i + 1; j < n; ++j) slots.emplace_back(i, j);
  const std::uint64_t total = std::uint64_t{1} << slots.size();
  for (std::uint64_t mask = 1; mask < total; ++mask) {
    std::vector<Edge> e;
    std::vector<NodeId> parent(n);
    for (NodeId i = 0; i < n; ++i) parent[i] = i;
    auto find = [&](NodeId x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    std::size_t components = n;
    for (std::size_t s = 0; s < slots.size(); ++s) {
      if (!(mask >> s & 1)) continue;
      e.push_back({slots[s].first, slots[s].second});
      NodeId a = find(slots[s].first), b = find(slots[s].second);
      if (a != b) {
        parent[a] = b;
        --components;
      }
    }
    if (components == 1) f(Graph::from_edges(n, e));
  }
}

/// Intra-community edge count by scanning the edge list.
inline std::uint64_t intra_edges(const Graph& g, const std::vector<Label>& part) {
  std::uint64_t count = 0;
  for (const Edge& e : g.edges()) count += part[e.u] == part[e.v];
  return count;
}

}  // namespace labelflow::testing
