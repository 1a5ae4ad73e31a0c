#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "lnf/errors.hpp"
#include "lnf/graph.hpp"
#include "lnf/io.hpp"

namespace lnf {

// Canonical labeling is implemented for orders up to 16 (one adjacency row
// per uint16_t); everything the enumeration touches fits well below that.
inline constexpr int kCanonMaxOrder = 16;

struct SmallGraph {
  int n = 0;
  std::array<std::uint16_t, 16> adj{};

  bool has_edge(int u, int v) const { return (adj[u] >> v) & 1u; }
  void add_edge(int u, int v) {
    adj[u] |= std::uint16_t(1u << v);
    adj[v] |= std::uint16_t(1u << u);
  }
  int degree(int v) const { return std::popcount(adj[v]); }
  long long size() const {
    int s = 0;
    for (int v = 0; v < n; ++v) s += degree(v);
    return s / 2;
  }

  static SmallGraph from_graph(const Graph& g) {
    if (g.order() > kCanonMaxOrder)
      throw refusal_error("order " + std::to_string(g.order()) +
                          " beyond the canonical-labeling scope (16)");
    SmallGraph s;
    s.n = g.order();
    for (auto [u, v] : g.edges()) s.add_edge(u, v);
    return s;
  }

  Graph to_graph() const {
    Graph::Builder b(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (has_edge(u, v)) b.add_edge(u, v);
    return b.build();
  }

  friend bool operator==(const SmallGraph&, const SmallGraph&) = default;
};

namespace detail {

// One round of color refinement: signature = (old color, neighbor color
// counts packed four bits per color). Colors are dense ranks, so they are
// isomorphism-invariant vertex attributes.
inline std::array<std::uint8_t, 16> refine_colors(
    const SmallGraph& g, std::array<std::uint8_t, 16> colors) {
  const int n = g.n;
  for (int round = 0; round < n; ++round) {
    std::array<std::pair<std::uint8_t, std::uint64_t>, 16> sig{};
    for (int v = 0; v < n; ++v) {
      std::uint64_t packed = 0;
      std::uint16_t nb = g.adj[v];
      while (nb) {
        int u = std::countr_zero(nb);
        nb &= nb - 1;
        packed += std::uint64_t{1} << (4 * colors[u]);
      }
      sig[v] = {colors[v], packed};
    }
    std::array<std::uint8_t, 16> order{};
    std::iota(order.begin(), order.begin() + n, 0);
    std::sort(order.begin(), order.begin() + n,
              [&](std::uint8_t a, std::uint8_t b) { return sig[a] < sig[b]; });
    std::array<std::uint8_t, 16> next{};
    std::uint8_t rank = 0;
    for (int i = 0; i < n; ++i) {
      if (i > 0 && sig[order[i]] != sig[order[i - 1]]) ++rank;
      next[order[i]] = rank;
    }
    if (next == colors) break;
    colors = next;
  }
  return colors;
}

// Ordered partition of the not-yet-placed vertices: verts[0..count) grouped
// by cell, cell_start bit i set iff position i begins a cell.
struct Cells {
  std::array<std::uint8_t, 16> verts{};
  std::uint16_t cell_start = 0;
  int count = 0;
};

struct CanonSearcher {
  const SmallGraph& g;
  std::array<std::uint16_t, 16> best_cols{};
  std::array<std::uint8_t, 16> best_perm{};
  bool have_best = false;
  std::array<std::uint16_t, 16> cur_cols{};
  std::array<std::uint8_t, 16> cur_perm{};

  explicit CanonSearcher(const SmallGraph& gr) : g(gr) {}

  // Bits of the column revealed by placing u at position pos: bit pos-1-i is
  // adjacency to the vertex at position i.
  std::uint16_t column_bits(int u, int pos) const {
    std::uint16_t col = 0;
    for (int i = 0; i < pos; ++i)
      col = std::uint16_t((col << 1) | ((g.adj[u] >> cur_perm[i]) & 1u));
    return col;
  }

  // -1 strictly below best, 0 equal so far, +1 strictly above.
  int prefix_compare(int pos) const {
    for (int i = 0; i <= pos; ++i) {
      if (cur_cols[i] != best_cols[i]) return cur_cols[i] < best_cols[i] ? -1 : 1;
    }
    return 0;
  }

  void dfs(const Cells& cells, int pos) {
    if (pos == g.n) {
      if (!have_best || prefix_compare(g.n - 1) < 0) {
        best_cols = cur_cols;
        best_perm = cur_perm;
        have_best = true;
      }
      return;
    }
    int cell_end = 1;
    while (cell_end < cells.count && !((cells.cell_start >> cell_end) & 1u))
      ++cell_end;
    // all members of the first cell reveal the same column
    cur_cols[pos] = column_bits(cells.verts[0], pos);
    if (have_best && prefix_compare(pos) > 0) return;
    std::array<std::uint8_t, 16> tried{};
    int tried_count = 0;
    for (int idx = 0; idx < cell_end; ++idx) {
      const int u = cells.verts[idx];
      bool twin = false;
      for (int t = 0; t < tried_count && !twin; ++t) {
        const int w = tried[t];
        const std::uint16_t mask = std::uint16_t(~((1u << u) | (1u << w)));
        twin = (g.adj[u] & mask) == (g.adj[w] & mask);
      }
      if (twin) continue;
      tried[tried_count++] = std::uint8_t(u);
      cur_perm[pos] = std::uint8_t(u);
      dfs(split(cells, cell_end, u), pos + 1);
    }
  }

  // Remove u from the first cell and split every cell by adjacency to u,
  // adjacent part first.
  Cells split(const Cells& cells, int cell_end, int u) const {
    Cells out;
    int w = 0;
    auto emit_cell = [&](int from, int to) {  // [from, to) of cells.verts
      int adj_start = w;
      for (int i = from; i < to; ++i) {
        int v = cells.verts[i];
        if (v == u) continue;
        if ((g.adj[u] >> v) & 1u) out.verts[w++] = std::uint8_t(v);
      }
      int nonadj_start = w;
      for (int i = from; i < to; ++i) {
        int v = cells.verts[i];
        if (v == u) continue;
        if (!((g.adj[u] >> v) & 1u)) out.verts[w++] = std::uint8_t(v);
      }
      if (nonadj_start > adj_start) out.cell_start |= std::uint16_t(1u << adj_start);
      if (w > nonadj_start) out.cell_start |= std::uint16_t(1u << nonadj_start);
    };
    emit_cell(0, cell_end);
    int from = cell_end;
    for (int i = cell_end + 1; i <= cells.count; ++i) {
      if (i == cells.count || ((cells.cell_start >> i) & 1u)) {
        emit_cell(from, i);
        from = i;
      }
    }
    out.count = w;
    return out;
  }
};

}  // namespace detail

struct CanonOutcome {
  int n = 0;
  std::array<std::uint16_t, 16> cols{};   // canonical column bits
  std::array<std::uint8_t, 16> perm{};    // perm[pos] = original vertex
  std::array<std::uint8_t, 16> colors{};  // stable refinement colors
};

inline CanonOutcome canonical_labeling(
    const SmallGraph& g, const std::array<std::uint8_t, 16>* initial = nullptr) {
  CanonOutcome out;
  out.n = g.n;
  if (g.n == 0) return out;
  std::array<std::uint8_t, 16> colors{};
  if (initial) {
    // normalize the given colors to dense ranks
    std::array<std::uint8_t, 16> order{};
    std::iota(order.begin(), order.begin() + g.n, 0);
    std::sort(order.begin(), order.begin() + g.n, [&](auto a, auto b) {
      return (*initial)[a] < (*initial)[b];
    });
    std::uint8_t rank = 0;
    for (int i = 0; i < g.n; ++i) {
      if (i > 0 && (*initial)[order[i]] != (*initial)[order[i - 1]]) ++rank;
      colors[order[i]] = rank;
    }
  }
  colors = detail::refine_colors(g, colors);
  out.colors = colors;
  detail::Cells cells;
  std::array<std::uint8_t, 16> order{};
  std::iota(order.begin(), order.begin() + g.n, 0);
  std::stable_sort(order.begin(), order.begin() + g.n,
                   [&](auto a, auto b) { return colors[a] < colors[b]; });
  cells.count = g.n;
  for (int i = 0; i < g.n; ++i) {
    cells.verts[i] = order[i];
    if (i == 0 || colors[order[i]] != colors[order[i - 1]])
      cells.cell_start |= std::uint16_t(1u << i);
  }
  detail::CanonSearcher searcher(g);
  searcher.dfs(cells, 0);
  out.cols = searcher.best_cols;
  out.perm = searcher.best_perm;
  return out;
}

inline SmallGraph apply_canonical(const CanonOutcome& o) {
  SmallGraph out;
  out.n = o.n;
  for (int j = 1; j < o.n; ++j)
    for (int i = 0; i < j; ++i)
      if ((o.cols[j] >> (j - 1 - i)) & 1u) out.add_edge(i, j);
  return out;
}

inline std::string graph6_from_canon(const CanonOutcome& o) {
  std::string out;
  detail::g6_append_number(out, o.n);
  int acc = 0, nbits = 0;
  for (int j = 1; j < o.n; ++j)
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | ((o.cols[j] >> (j - 1 - i)) & 1);
      if (++nbits == 6) {
        out.push_back(char(63 + acc));
        acc = 0;
        nbits = 0;
      }
    }
  if (nbits > 0) out.push_back(char(63 + (acc << (6 - nbits))));
  return out;
}

// Canonical graph6 string: equal strings iff isomorphic graphs.
// Refuses orders beyond the canonizer's scope.
inline std::string canonical_form(const Graph& g) {
  return graph6_from_canon(canonical_labeling(SmallGraph::from_graph(g)));
}

inline std::string canonical_form_small(const SmallGraph& g) {
  return graph6_from_canon(canonical_labeling(g));
}

// Same Aut-orbit test via rooted canonical forms: a and b lie in one orbit
// iff the graphs with a (resp. b) individualized are color-isomorphic.
inline bool same_vertex_orbit(const SmallGraph& g, int a, int b) {
  if (a == b) return true;
  if (g.degree(a) != g.degree(b)) return false;
  std::array<std::uint8_t, 16> ca{}, cb{};
  for (int v = 0; v < g.n; ++v) {
    ca[v] = (v == a) ? 0 : 1;
    cb[v] = (v == b) ? 0 : 1;
  }
  CanonOutcome oa = canonical_labeling(g, &ca);
  CanonOutcome ob = canonical_labeling(g, &cb);
  return oa.cols == ob.cols;
}

// All automorphisms by brute-force permutation check; intended for tiny
// gadget graphs (order <= 8).
inline std::vector<std::array<std::uint8_t, 16>> automorphisms_brute(
    const SmallGraph& g) {
  if (g.n > 8) throw refusal_error("brute-force automorphisms limited to order 8");
  std::vector<std::array<std::uint8_t, 16>> out;
  std::array<std::uint8_t, 16> p{};
  std::iota(p.begin(), p.begin() + g.n, 0);
  do {
    bool ok = true;
    for (int u = 0; u < g.n && ok; ++u) {
      std::uint16_t mapped = 0;
      std::uint16_t nb = g.adj[u];
      while (nb) {
        int v = std::countr_zero(nb);
        nb &= nb - 1;
        mapped |= std::uint16_t(1u << p[v]);
      }
      ok = mapped == g.adj[p[u]];
    }
    if (ok) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.begin() + g.n));
  return out;
}

}  // namespace lnf
