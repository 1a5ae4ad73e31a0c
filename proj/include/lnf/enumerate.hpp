#pragma once

#include <array>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <functional>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "lnf/certificate.hpp"
#include "lnf/errors.hpp"
#include "lnf/graph.hpp"
#include "lnf/io.hpp"
#include "lnf/parallel.hpp"
#include "lnf/predicates.hpp"
#include "lnf/small_graph.hpp"

namespace lnf {

enum class EnumMode { labeled_exhaustive, canonical_augmentation };

struct SearchConstraints {
  int order = 0;
  long long min_size = 0;
  long long max_size = -1;  // -1: no bound beyond n(n-1)/2
  int min_degree = 0;
  bool require_connected = false;
  bool require_3_connected = false;
  bool require_locally_nonforesty = false;
  EnumMode mode = EnumMode::canonical_augmentation;
};

struct LevelCount {
  int order = 0;
  long long considered = 0;  // children that reached the canonical tests
  long long kept = 0;        // accepted representatives
};

struct EnumStats {
  bool infeasible = false;
  std::string infeasible_reason;
  long long structure_matches = 0;  // met order/size/min-degree at the target
  long long emitted = 0;            // also passed the predicate filters
  bool stopped_early = false;
  std::vector<LevelCount> levels;   // canonical-augmentation mode
  long long labeled_total = 0;      // labeled mode: masks scanned
  int resumed_from_level = 0;
};

// Return false from the visitor to stop the enumeration.
using GraphVisitor = std::function<bool(const Graph&)>;

struct CheckpointConfig {
  std::string path;
  bool resume = true;
};

namespace detail {

inline bool small_connected(const SmallGraph& g) {
  if (g.n == 0) return true;
  std::uint16_t seen = 1, frontier = 1;
  const std::uint16_t all = std::uint16_t((1u << g.n) - 1);
  while (frontier) {
    std::uint16_t next = 0;
    std::uint16_t f = frontier;
    while (f) {
      int v = std::countr_zero(f);
      f &= f - 1;
      next |= g.adj[v];
    }
    next &= std::uint16_t(~seen);
    seen |= next;
    frontier = next;
  }
  return seen == all;
}

inline bool small_connected_excluding(const SmallGraph& g, std::uint16_t blocked) {
  const std::uint16_t all = std::uint16_t((1u << g.n) - 1);
  std::uint16_t remaining = std::uint16_t(all & ~blocked);
  if (std::popcount(remaining) <= 1) return true;
  std::uint16_t start = std::uint16_t(remaining & (~remaining + 1));
  std::uint16_t seen = start, frontier = start;
  while (frontier) {
    std::uint16_t next = 0;
    std::uint16_t f = frontier;
    while (f) {
      int v = std::countr_zero(f);
      f &= f - 1;
      next |= g.adj[v];
    }
    next &= std::uint16_t(~seen & ~blocked);
    seen |= next;
    frontier = next;
  }
  return seen == remaining;
}

inline bool small_3_connected(const SmallGraph& g) {
  if (g.n < 4) return false;
  if (!small_connected(g)) return false;
  for (int u = 0; u < g.n; ++u)
    if (!small_connected_excluding(g, std::uint16_t(1u << u))) return false;
  for (int u = 0; u < g.n; ++u)
    for (int v = u + 1; v < g.n; ++v)
      if (!small_connected_excluding(g, std::uint16_t((1u << u) | (1u << v))))
        return false;
  return true;
}

// Cycle among the vertices of `mask`: edges exceed vertices minus components.
inline bool small_mask_has_cycle(const SmallGraph& g, std::uint16_t mask) {
  int verts = std::popcount(mask);
  if (verts < 3) return false;
  int edges2 = 0;
  std::uint16_t m = mask;
  while (m) {
    int v = std::countr_zero(m);
    m &= m - 1;
    edges2 += std::popcount(std::uint16_t(g.adj[v] & mask));
  }
  int edges = edges2 / 2;
  int comps = 0;
  std::uint16_t todo = mask;
  while (todo) {
    ++comps;
    std::uint16_t start = std::uint16_t(todo & (~todo + 1));
    std::uint16_t seen = start, frontier = start;
    while (frontier) {
      std::uint16_t next = 0;
      std::uint16_t f = frontier;
      while (f) {
        int v = std::countr_zero(f);
        f &= f - 1;
        next |= g.adj[v];
      }
      next &= std::uint16_t(mask & ~seen);
      seen |= next;
      frontier = next;
    }
    todo &= std::uint16_t(~seen);
  }
  return edges > verts - comps;
}

inline bool small_locally_nonforesty(const SmallGraph& g) {
  if (g.n == 0) return false;
  for (int v = 0; v < g.n; ++v) {
    if (g.degree(v) < 3) return false;
    if (!small_mask_has_cycle(g, g.adj[v])) return false;
  }
  return true;
}

inline bool passes_predicates(const SmallGraph& g, const SearchConstraints& c) {
  if (c.require_connected && !small_connected(g)) return false;
  if (c.require_locally_nonforesty && !small_locally_nonforesty(g)) return false;
  if (c.require_3_connected && !small_3_connected(g)) return false;
  return true;
}

// Lower bound on edges any completion must add: each current deficiency
// needs a future-current edge, and the remaining future vertices need
// min_degree endpoints each, two per future-future edge.
inline long long future_edge_bound(long long deficiency, int future, int min_degree) {
  long long need = static_cast<long long>(min_degree) * future - deficiency;
  return deficiency + (need > 0 ? (need + 1) / 2 : 0);
}

struct AugChild {
  SmallGraph canon;
  long long considered = 0;
  long long kept = 0;
};

}  // namespace detail

namespace detail {

inline std::string checkpoint_header(const SearchConstraints& c) {
  std::ostringstream h;
  h << "order " << c.order << " min-size " << c.min_size << " max-size "
    << c.max_size << " min-degree " << c.min_degree;
  return h.str();
}

inline void write_checkpoint(const CheckpointConfig& cp, const SearchConstraints& c,
                             int level, const std::vector<SmallGraph>& frontier) {
  std::ofstream out(cp.path, std::ios::trunc);
  if (!out) return;
  out << "lnf-checkpoint 1\n" << checkpoint_header(c) << " level " << level << "\n";
  for (const auto& g : frontier) out << emit_graph6(g.to_graph()) << "\n";
}

inline std::optional<std::pair<int, std::vector<SmallGraph>>> read_checkpoint(
    const CheckpointConfig& cp, const SearchConstraints& c) {
  std::ifstream in(cp.path);
  if (!in) return std::nullopt;
  std::string line;
  if (!std::getline(in, line) || line != "lnf-checkpoint 1") return std::nullopt;
  if (!std::getline(in, line)) return std::nullopt;
  const std::string expect = checkpoint_header(c) + " level ";
  if (line.rfind(expect, 0) != 0) return std::nullopt;
  int level = 0;
  try {
    level = std::stoi(line.substr(expect.size()));
  } catch (...) {
    return std::nullopt;
  }
  if (level < 1 || level >= c.order) return std::nullopt;
  std::vector<SmallGraph> frontier;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    frontier.push_back(SmallGraph::from_graph(parse_graph6(line)));
    if (frontier.back().n != level) return std::nullopt;
  }
  if (frontier.empty()) return std::nullopt;
  return std::make_pair(level, std::move(frontier));
}

}  // namespace detail

inline EnumStats enumerate_graphs(const SearchConstraints& c_in,
                                  const GraphVisitor& visit, int workers = 1,
                                  const CheckpointConfig* checkpoint = nullptr) {
  SearchConstraints c = c_in;
  if (c.order < 1) throw std::invalid_argument("enumeration needs order >= 1");
  const long long max_possible =
      static_cast<long long>(c.order) * (c.order - 1) / 2;
  if (c.max_size < 0 || c.max_size > max_possible) c.max_size = max_possible;
  EnumStats stats;
  if (c.min_size > c.max_size) {
    stats.infeasible = true;
    stats.infeasible_reason = "size range is empty";
    return stats;
  }
  if (static_cast<long long>(c.min_degree) * c.order > 2 * c.max_size) {
    stats.infeasible = true;
    stats.infeasible_reason =
        "min_degree * order exceeds twice the size budget";
    return stats;
  }

  auto emit_final = [&](const SmallGraph& sg) -> bool {
    ++stats.structure_matches;
    if (!detail::passes_predicates(sg, c)) return true;
    ++stats.emitted;
    if (!visit(sg.to_graph())) {
      stats.stopped_early = true;
      return false;
    }
    return true;
  };

  if (c.mode == EnumMode::labeled_exhaustive) {
    if (c.order > 6)
      throw std::invalid_argument(
          "labeled-exhaustive mode is limited to order 6");
    const int pairs = c.order * (c.order - 1) / 2;
    std::array<std::pair<int, int>, 15> pair_of{};
    int idx = 0;
    for (int v = 1; v < c.order; ++v)
      for (int u = 0; u < v; ++u) pair_of[idx++] = {u, v};
    for (std::uint32_t mask = 0; mask < (1u << pairs); ++mask) {
      ++stats.labeled_total;
      if (std::popcount(mask) < c.min_size || std::popcount(mask) > c.max_size)
        continue;
      SmallGraph sg;
      sg.n = c.order;
      for (int i = 0; i < pairs; ++i)
        if ((mask >> i) & 1u) sg.add_edge(pair_of[i].first, pair_of[i].second);
      bool deg_ok = true;
      for (int v = 0; v < sg.n && deg_ok; ++v)
        deg_ok = sg.degree(v) >= c.min_degree;
      if (!deg_ok) continue;
      if (!emit_final(sg)) return stats;
    }
    return stats;
  }

  // canonical augmentation
  if (c.order > kCanonMaxOrder)
    throw refusal_error("canonical augmentation limited to order " +
                        std::to_string(kCanonMaxOrder));

  std::vector<SmallGraph> frontier;
  int level = 1;
  if (checkpoint && checkpoint->resume) {
    if (auto loaded = detail::read_checkpoint(*checkpoint, c)) {
      level = loaded->first;
      frontier = std::move(loaded->second);
      stats.resumed_from_level = level;
    }
  }
  if (frontier.empty()) {
    SmallGraph k1;
    k1.n = 1;
    frontier = {k1};
    level = 1;
  }

  // Children of one parent: every neighborhood subset for the new vertex,
  // pruned by the edge budget, deduplicated per parent, and kept only when
  // the new vertex sits in the canonical-deletion orbit.
  auto expand_parent = [&](const SmallGraph& parent, int child_order,
                           std::vector<SmallGraph>& out_children,
                           long long& considered, long long& kept) {
    const int q = child_order;
    const int fut = c.order - q;
    const bool final_level = fut == 0;
    const long long pm = parent.size();
    std::set<std::array<std::uint16_t, 16>> seen_children;
    for (std::uint32_t mask = 0; mask < (1u << (q - 1)); ++mask) {
      const int added = std::popcount(mask);
      const long long m = pm + added;
      if (m > c.max_size) continue;
      SmallGraph child = parent;
      child.n = q;
      child.adj[q - 1] = std::uint16_t(mask);
      std::uint16_t mm = std::uint16_t(mask);
      while (mm) {
        int v = std::countr_zero(mm);
        mm &= mm - 1;
        child.adj[v] |= std::uint16_t(1u << (q - 1));
      }
      long long deficiency = 0;
      for (int v = 0; v < q; ++v) {
        int d = child.degree(v);
        if (d < c.min_degree) deficiency += c.min_degree - d;
      }
      if (final_level) {
        if (m < c.min_size || deficiency > 0) continue;
      } else if (m + detail::future_edge_bound(deficiency, fut, c.min_degree) >
                 c.max_size) {
        continue;
      }
      ++considered;
      CanonOutcome canon = canonical_labeling(child);
      std::array<std::uint16_t, 16> key = canon.cols;
      if (!seen_children.insert(key).second) continue;
      const int last = canon.perm[q - 1];
      bool canonical_deletion = last == q - 1;
      if (!canonical_deletion && canon.colors[last] == canon.colors[q - 1])
        canonical_deletion = same_vertex_orbit(child, q - 1, last);
      if (!canonical_deletion) continue;
      ++kept;
      out_children.push_back(apply_canonical(canon));
    }
  };

  for (; level < c.order; ++level) {
    const int child_order = level + 1;
    LevelCount lc;
    lc.order = child_order;
    const std::size_t np = frontier.size();
    int chunk_count =
        static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(
                             std::max(workers, 1)), np));
    std::vector<std::vector<SmallGraph>> chunk_children(
        std::max(chunk_count, 1));
    std::vector<long long> chunk_considered(std::max(chunk_count, 1), 0);
    std::vector<long long> chunk_kept(std::max(chunk_count, 1), 0);
    parallel_chunks(np, workers, [&](int ci, std::size_t b, std::size_t e) {
      for (std::size_t i = b; i < e; ++i)
        expand_parent(frontier[i], child_order, chunk_children[ci],
                      chunk_considered[ci], chunk_kept[ci]);
    });
    std::vector<SmallGraph> next;
    for (int ci = 0; ci < std::max(chunk_count, 1); ++ci) {
      next.insert(next.end(), chunk_children[ci].begin(),
                  chunk_children[ci].end());
      lc.considered += chunk_considered[ci];
      lc.kept += chunk_kept[ci];
    }
    stats.levels.push_back(lc);
    frontier = std::move(next);
    if (checkpoint && !checkpoint->path.empty() && child_order < c.order)
      detail::write_checkpoint(*checkpoint, c, child_order, frontier);
  }

  if (c.order == 1) {
    // frontier already holds the single order-1 graph
  }
  for (const auto& sg : frontier) {
    if (sg.size() < c.min_size || sg.size() > c.max_size) continue;
    bool deg_ok = true;
    for (int v = 0; v < sg.n && deg_ok; ++v)
      deg_ok = sg.degree(v) >= c.min_degree;
    if (!deg_ok) continue;
    if (!emit_final(sg)) return stats;
  }
  return stats;
}

// Convenience collector.
inline std::vector<Graph> enumerate_to_vector(const SearchConstraints& c,
                                              int workers = 1,
                                              EnumStats* stats_out = nullptr) {
  std::vector<Graph> out;
  EnumStats st = enumerate_graphs(
      c,
      [&](const Graph& g) {
        out.push_back(g);
        return true;
      },
      workers);
  if (stats_out) *stats_out = st;
  return out;
}

struct MinSizeResult {
  long long size = -1;
  Graph witness;
  long long labeled_total = 0;
};

// Exact minimum size of a locally nonforesty graph of order 5 or 6 by a
// full labeled sweep; the witness is the first minimal graph in mask order.
inline MinSizeResult min_size_locally_nonforesty(int n) {
  if (n != 5 && n != 6)
    throw std::invalid_argument("labeled-exhaustive oracle covers orders 5 and 6");
  const int pairs = n * (n - 1) / 2;
  std::array<std::pair<int, int>, 15> pair_of{};
  int idx = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) pair_of[idx++] = {u, v};
  MinSizeResult best;
  std::optional<SmallGraph> best_graph;
  for (std::uint32_t mask = 0; mask < (1u << pairs); ++mask) {
    ++best.labeled_total;
    SmallGraph sg;
    sg.n = n;
    for (int i = 0; i < pairs; ++i)
      if ((mask >> i) & 1u) sg.add_edge(pair_of[i].first, pair_of[i].second);
    if (!detail::small_locally_nonforesty(sg)) continue;
    long long m = sg.size();
    if (best.size < 0 || m < best.size) {
      best.size = m;
      best_graph = sg;
    }
  }
  if (best_graph) best.witness = best_graph->to_graph();
  return best;
}

struct CertifyOptions {
  bool allow_long_run = false;
  int workers = 1;
  std::string checkpoint_path;
  const Graph* witness_hint = nullptr;
};

// Exhaustively certifies that `claimed` is the minimum size of a 3-connected
// locally nonforesty graph of order `order`: no such graph below the claim,
// one exists at the claim. Order 8 by default; order 9 is a long-running
// opt-in. The below-claim stage is always swept in full.
inline Certificate certify_minimum(int order, long long claimed,
                                   const CertifyOptions& opt = {}) {
  if (!(order == 8 || (order == 9 && opt.allow_long_run)))
    throw refusal_error(
        order == 9
            ? "order 9 exhaustion may run for a long time; pass the long-run option"
            : "exhaustive certification envelope is order 8 (order 9 with "
              "long-run); cost grows superexponentially beyond");
  if (claimed < 1) throw std::invalid_argument("claimed size must be positive");
  const auto t0 = std::chrono::steady_clock::now();
  Certificate cert;
  cert.kind = "minimality";
  cert.constraints = {
      {"order", order},
      {"claimed_size", claimed},
      {"min_degree", 3},
      {"predicates", {"3_connected", "locally_nonforesty"}}};

  SearchConstraints below;
  below.order = order;
  below.min_size = 0;
  below.max_size = claimed - 1;
  below.min_degree = 3;
  below.require_3_connected = true;
  below.require_locally_nonforesty = true;
  std::vector<std::string> counterexamples;
  CheckpointConfig cp{opt.checkpoint_path, true};
  EnumStats below_stats = enumerate_graphs(
      below,
      [&](const Graph& g) {
        counterexamples.push_back(emit_graph6(g));
        return counterexamples.size() < 4;
      },
      opt.workers, opt.checkpoint_path.empty() ? nullptr : &cp);

  nlohmann::json below_counts;
  below_counts["structure_matches"] = below_stats.structure_matches;
  below_counts["found"] = below_stats.emitted;
  below_counts["levels"] = nlohmann::json::array();
  for (const auto& l : below_stats.levels)
    below_counts["levels"].push_back(
        {{"order", l.order}, {"considered", l.considered}, {"kept", l.kept}});
  if (below_stats.resumed_from_level > 0)
    below_counts["resumed_from_level"] = below_stats.resumed_from_level;
  cert.counts["below_claimed"] = below_counts;

  bool exists_at = false;
  std::string witness;
  bool hint_used = false;
  if (opt.witness_hint) {
    const Graph& h = *opt.witness_hint;
    if (h.order() == order && h.size() == claimed && min_degree(h) >= 3 &&
        is_k_connected(h, 3).value && is_locally_nonforesty(h).value) {
      exists_at = true;
      witness = emit_graph6(h);
      hint_used = true;
    }
  }
  if (!exists_at) {
    SearchConstraints at = below;
    at.min_size = claimed;
    at.max_size = claimed;
    EnumStats at_stats = enumerate_graphs(
        at,
        [&](const Graph& g) {
          exists_at = true;
          witness = emit_graph6(g);
          return false;  // first hit suffices
        },
        1);
    cert.counts["at_claimed"] = {
        {"structure_matches", at_stats.structure_matches},
        {"found", at_stats.emitted}};
  }
  cert.counts["witness_hint_used"] = hint_used;

  if (!counterexamples.empty()) {
    cert.verdict = "failed";
    cert.details.push_back(
        {{"reason", "a qualifying graph exists below the claimed size"},
         {"examples", counterexamples}});
  } else if (!exists_at) {
    cert.verdict = "failed";
    cert.details.push_back(
        {{"reason", "no qualifying graph exists at the claimed size"}});
  } else {
    cert.verdict = "confirmed";
    cert.witness_graph6 = witness;
  }
  cert.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return cert;
}

}  // namespace lnf
