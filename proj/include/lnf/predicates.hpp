#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "lnf/graph.hpp"

namespace lnf {

// Subgraph induced by the open neighborhood of v.
inline Graph local_subgraph(const Graph& g, int v) {
  return induced_subgraph(g, g.neighborhood(v)).graph;
}

struct LocalSubgraphReport {
  int vertex = 0;
  int local_order = 0;
  long long local_size = 0;
  bool has_cycle = false;
};

namespace detail {

// Number of connected components.
inline int component_count(const Graph& g) {
  const int n = g.order();
  if (n == 0) return 0;
  Bitset seen(n);
  int comps = 0;
  for (int s = 0; s < n; ++s) {
    if (seen.test(s)) continue;
    ++comps;
    seen.set(s);
    Bitset frontier(n);
    frontier.set(s);
    while (frontier.any()) {
      Bitset next(n);
      frontier.for_each([&](int v) { next |= g.row(v); });
      next.subtract(seen);
      seen |= next;
      frontier = next;
    }
  }
  return comps;
}

// True if the vertices outside `blocked` induce a connected subgraph
// (vacuously true on <= 1 remaining vertex).
inline bool connected_excluding(const Graph& g, const Bitset& blocked) {
  const int n = g.order();
  int remaining = n - blocked.count();
  if (remaining <= 1) return true;
  int start = -1;
  for (int v = 0; v < n; ++v)
    if (!blocked.test(v)) {
      start = v;
      break;
    }
  Bitset seen = blocked;
  seen.set(start);
  Bitset frontier(n);
  frontier.set(start);
  int reached = 1;
  while (frontier.any()) {
    Bitset next(n);
    frontier.for_each([&](int v) { next |= g.row(v); });
    next.subtract(seen);
    reached += next.count();
    seen |= next;
    frontier = next;
  }
  return reached == remaining;
}

}  // namespace detail

// Acyclicity via DFS with parent tracking.
inline bool is_forest(const Graph& g) {
  const int n = g.order();
  std::vector<signed char> state(n, 0);
  std::vector<std::pair<int, int>> stack;  // (vertex, parent)
  for (int s = 0; s < n; ++s) {
    if (state[s]) continue;
    stack.emplace_back(s, -1);
    state[s] = 1;
    while (!stack.empty()) {
      auto [v, parent] = stack.back();
      stack.pop_back();
      bool cycle = false;
      g.row(v).for_each([&](int u) {
        if (u == parent) return;  // simple graph: parent edge seen once
        if (state[u]) {
          cycle = true;
        } else {
          state[u] = 1;
          stack.emplace_back(u, v);
        }
      });
      if (cycle) return false;
    }
  }
  return true;
}

// Acyclicity via the count identity m = n - #components.
inline bool is_forest_by_count(const Graph& g) {
  return g.size() == g.order() - detail::component_count(g);
}

// Cross-check mode: both implementations must agree.
inline bool is_forest_checked(const Graph& g) {
  bool a = is_forest(g);
  bool b = is_forest_by_count(g);
  if (a != b) throw std::logic_error("forest implementations disagree");
  return a;
}

inline LocalSubgraphReport local_report(const Graph& g, int v) {
  Graph local = local_subgraph(g, v);
  return {v, local.order(), local.size(), !is_forest(local)};
}

// True iff v is the hub of a wheel subgraph, i.e. its local subgraph
// contains a cycle.
inline bool wheel_center_check(const Graph& g, int v) {
  if (g.degree(v) <= 2) return false;  // cycles need three vertices
  return !is_forest(local_subgraph(g, v));
}

inline bool is_locally_foresty(const Graph& g) {
  if (g.order() == 0) throw std::domain_error("predicate on the empty graph");
  for (int v = 0; v < g.order(); ++v)
    if (wheel_center_check(g, v)) return false;
  return true;
}

struct LocallyNonforestyResult {
  bool value = false;
  // Smallest vertex whose local subgraph is a forest, when value is false.
  std::optional<int> forest_witness;
};

inline LocallyNonforestyResult is_locally_nonforesty(const Graph& g) {
  if (g.order() == 0) throw std::domain_error("predicate on the empty graph");
  for (int v = 0; v < g.order(); ++v)
    if (!wheel_center_check(g, v)) return {false, v};
  return {true, std::nullopt};
}

struct ConnectivityResult {
  bool value = false;
  // Violating cut when value is false: empty set means the graph itself is
  // disconnected; absent means the order is below k+1.
  std::optional<VertexSet> cut;
};

// Brute-force k-connectivity for k <= 3: order >= k+1 and no vertex set of
// size < k disconnects. Deletion candidates are scanned in lexicographic
// order so the reported cut is deterministic.
inline ConnectivityResult is_k_connected(const Graph& g, int k) {
  if (k < 1 || k > 3) throw std::invalid_argument("k must be 1, 2 or 3");
  const int n = g.order();
  if (n < k + 1) return {false, std::nullopt};
  Bitset blocked(n);
  if (!detail::connected_excluding(g, blocked)) return {false, VertexSet{}};
  if (k >= 2) {
    for (int u = 0; u < n; ++u) {
      Bitset b(n);
      b.set(u);
      if (!detail::connected_excluding(g, b)) return {false, VertexSet{u}};
    }
  }
  if (k >= 3) {
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) {
        Bitset b(n);
        b.set(u);
        b.set(v);
        if (!detail::connected_excluding(g, b))
          return {false, VertexSet{u, v}};
      }
  }
  return {true, std::nullopt};
}

inline bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  return detail::connected_excluding(g, Bitset(g.order()));
}

}  // namespace lnf
