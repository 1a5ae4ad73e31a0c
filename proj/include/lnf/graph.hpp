#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lnf/bitset.hpp"

namespace lnf {

// Vertex subset, kept sorted and duplicate-free by the operations that
// produce one.
using VertexSet = std::vector<int>;

// Default cap on graph order. Everything in this toolkit is desk-scale;
// the cap mostly guards against malformed input headers.
inline constexpr int kMaxOrder = 10000;

// Simple undirected graph on vertices 0..order-1. Immutable once built:
// construct through Graph::Builder. Adjacency is one bitset row per vertex,
// symmetric and irreflexive by construction.
class Graph {
 public:
  class Builder;

  Graph() = default;

  int order() const noexcept { return order_; }
  long long size() const noexcept { return size_; }

  int degree(int v) const {
    check_vertex(v);
    return deg_[v];
  }

  bool has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return u != v && adj_[u].test(v);
  }

  const Bitset& row(int v) const {
    check_vertex(v);
    return adj_[v];
  }

  VertexSet neighborhood(int v) const {
    check_vertex(v);
    VertexSet out;
    out.reserve(deg_[v]);
    adj_[v].for_each([&](int u) { out.push_back(u); });
    return out;
  }

  VertexSet closed_neighborhood(int v) const {
    VertexSet out = neighborhood(v);
    out.insert(std::lower_bound(out.begin(), out.end(), v), v);
    return out;
  }

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(size_));
    for (int u = 0; u < order_; ++u)
      adj_[u].for_each([&](int v) {
        if (u < v) out.emplace_back(u, v);
      });
    return out;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_vertex(int v) const {
    if (v < 0 || v >= order_)
      throw std::out_of_range("vertex " + std::to_string(v) +
                              " out of range for order " +
                              std::to_string(order_));
  }

  int order_ = 0;
  long long size_ = 0;
  std::vector<Bitset> adj_;
  std::vector<int> deg_;
};

class Graph::Builder {
 public:
  explicit Builder(int order, int max_order = kMaxOrder) {
    if (order < 0) throw std::invalid_argument("negative graph order");
    if (order > max_order)
      throw std::invalid_argument("order " + std::to_string(order) +
                                  " exceeds cap " + std::to_string(max_order));
    g_.order_ = order;
    g_.adj_.assign(order, Bitset(order));
    g_.deg_.assign(order, 0);
  }

  explicit Builder(const Graph& g) : g_(g) {}

  int order() const noexcept { return g_.order_; }

  bool has_edge(int u, int v) const {
    g_.check_vertex(u);
    g_.check_vertex(v);
    return u != v && g_.adj_[u].test(v);
  }

  Builder& add_edge(int u, int v) {
    g_.check_vertex(u);
    g_.check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loops are not allowed");
    if (!g_.adj_[u].test(v)) {
      g_.adj_[u].set(v);
      g_.adj_[v].set(u);
      ++g_.deg_[u];
      ++g_.deg_[v];
      ++g_.size_;
    }
    return *this;
  }

  Graph build() const { return g_; }

 private:
  Graph g_;
};

inline long long degree_sum(const Graph& g) {
  long long s = 0;
  for (int v = 0; v < g.order(); ++v) s += g.degree(v);
  return s;
}

inline int min_degree(const Graph& g) {
  if (g.order() == 0) throw std::domain_error("min_degree of the empty graph");
  int d = g.degree(0);
  for (int v = 1; v < g.order(); ++v) d = std::min(d, g.degree(v));
  return d;
}

inline int max_degree(const Graph& g) {
  if (g.order() == 0) throw std::domain_error("max_degree of the empty graph");
  int d = g.degree(0);
  for (int v = 1; v < g.order(); ++v) d = std::max(d, g.degree(v));
  return d;
}

namespace detail {
inline VertexSet normalized_subset(const Graph& g, VertexSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  if (!s.empty() && (s.front() < 0 || s.back() >= g.order()))
    throw std::out_of_range("vertex set contains out-of-range vertices");
  return s;
}
}  // namespace detail

struct InducedSubgraph {
  Graph graph;
  VertexSet vertices;  // vertices[new_index] = original vertex
};

inline InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
  VertexSet vs = detail::normalized_subset(g, s);
  Graph::Builder b(static_cast<int>(vs.size()),
                   std::max<int>(kMaxOrder, static_cast<int>(vs.size())));
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (g.has_edge(vs[i], vs[j])) b.add_edge(int(i), int(j));
  return {b.build(), std::move(vs)};
}

// Number of edges with exactly one endpoint in s.
inline long long edge_boundary(const Graph& g, const VertexSet& s) {
  VertexSet vs = detail::normalized_subset(g, s);
  Bitset in(g.order() == 0 ? 1 : g.order());
  for (int v : vs) in.set(v);
  long long cut = 0;
  for (int v : vs) {
    Bitset out = g.row(v);
    out.subtract(in);
    cut += out.count();
  }
  return cut;
}

inline Graph empty_graph(int n) { return Graph::Builder(n).build(); }

inline Graph complete_graph(int n) {
  Graph::Builder b(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) b.add_edge(u, v);
  return b.build();
}

inline Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs order >= 3");
  Graph::Builder b(n);
  for (int v = 0; v < n; ++v) b.add_edge(v, (v + 1) % n);
  return b.build();
}

inline Graph path_graph(int n) {
  Graph::Builder b(n);
  for (int v = 0; v + 1 < n; ++v) b.add_edge(v, v + 1);
  return b.build();
}

// Disjoint union of a and b plus all edges between them. Vertices of a keep
// their indices; vertices of b are shifted by a.order().
inline Graph join(const Graph& a, const Graph& b) {
  const int na = a.order(), nb = b.order();
  Graph::Builder out(na + nb);
  for (auto [u, v] : a.edges()) out.add_edge(u, v);
  for (auto [u, v] : b.edges()) out.add_edge(na + u, na + v);
  for (int u = 0; u < na; ++u)
    for (int v = 0; v < nb; ++v) out.add_edge(u, na + v);
  return out.build();
}

// Wheel: cycle 0..rim-1 plus a hub (index rim) adjacent to every rim vertex.
inline Graph wheel_graph(int rim) {
  if (rim < 3) throw std::invalid_argument("wheel needs rim >= 3");
  Graph::Builder b(rim + 1);
  for (int v = 0; v < rim; ++v) {
    b.add_edge(v, (v + 1) % rim);
    b.add_edge(v, rim);
  }
  return b.build();
}

}  // namespace lnf
