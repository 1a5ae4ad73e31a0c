#pragma once

#include <string>
#include <vector>

#include "lnf/bounds.hpp"
#include "lnf/errors.hpp"
#include "lnf/gadgets.hpp"
#include "lnf/graph.hpp"
#include "lnf/predicates.hpp"

namespace lnf {

// Extremal witnesses are rings of blocks: 2k or 2k+1 blocks joined by a
// cycle of z->y edges plus chords pairing w ports (and one x port for the
// residue-7 rule), with block 1 swapped for a non-A gadget when the order
// is not a multiple of 4.

struct PortRef {
  int block = 0;  // ring position, 0-based
  std::string port;
};

struct PlanEdge {
  PortRef a, b;
};

struct PlanBlock {
  GadgetId id = GadgetId::A;
  int order = 0;
  long long size = 0;
};

struct ConstructionPlan {
  long long n = 0;
  long long k = 0;
  int r = 0;
  std::vector<PlanBlock> blocks;
  std::vector<PlanEdge> ring;
  std::vector<PlanEdge> chords;

  long long planned_order() const {
    long long o = 0;
    for (const auto& b : blocks) o += b.order;
    return o;
  }
  long long planned_size() const {
    long long s = 0;
    for (const auto& b : blocks) s += b.size;
    return s + static_cast<long long>(ring.size() + chords.size());
  }
};

inline ConstructionPlan build_plan(long long n) {
  auto [nn, k, r] = decompose(n);
  ConstructionPlan plan;
  plan.n = n;
  plan.k = k;
  plan.r = r;

  GadgetId first = GadgetId::A;
  switch (r) {
    case 0: case 4: first = GadgetId::A; break;
    case 1: case 5: first = GadgetId::B1; break;
    case 2: case 6: first = GadgetId::C1; break;
    case 3: first = GadgetId::D1; break;
    case 7: first = GadgetId::D2; break;
  }
  const long long block_count = (r <= 3) ? 2 * k : 2 * k + 1;
  for (long long i = 0; i < block_count; ++i) {
    GadgetId id = (i == 0) ? first : GadgetId::A;
    GadgetRequirement req = requirement_for(id);
    plan.blocks.push_back({id, req.order, req.size});
  }
  const int bc = static_cast<int>(block_count);
  for (int i = 0; i < bc; ++i)
    plan.ring.push_back({{i, "z"}, {(i + 1) % bc, "y"}});
  if (r <= 3) {
    for (long long j = 1; j <= k; ++j)
      plan.chords.push_back(
          {{static_cast<int>(j - 1), "w"}, {static_cast<int>(k + j - 1), "w"}});
  } else if (r <= 6) {
    plan.chords.push_back({{0, "w"}, {static_cast<int>(k), "w"}});
    for (long long j = 1; j <= k; ++j)
      plan.chords.push_back(
          {{static_cast<int>(j - 1), "w"}, {static_cast<int>(k + j), "w"}});
  } else {
    plan.chords.push_back({{0, "w"}, {static_cast<int>(k), "w"}});
    plan.chords.push_back({{0, "x"}, {static_cast<int>(k + 1), "w"}});
    for (long long j = 2; j <= k; ++j)
      plan.chords.push_back(
          {{static_cast<int>(j - 1), "w"}, {static_cast<int>(k + j), "w"}});
  }
  return plan;
}

// Deterministic layout: block i occupies a contiguous index range in ring
// order with the gadget's internal numbering preserved.
inline Graph assemble(const ConstructionPlan& plan, const GadgetStore& store) {
  std::vector<int> offset(plan.blocks.size() + 1, 0);
  for (std::size_t i = 0; i < plan.blocks.size(); ++i) {
    const GadgetSpec& spec = store.get(plan.blocks[i].id);
    validate_spec(spec);
    if (spec.graph.order() != plan.blocks[i].order ||
        spec.graph.size() != plan.blocks[i].size)
      throw assembly_error(std::string("gadget ") +
                           to_string(plan.blocks[i].id) +
                           " does not match the plan block");
    offset[i + 1] = offset[i] + spec.graph.order();
  }
  if (offset.back() != plan.n)
    throw assembly_error("plan block orders do not sum to the target order");

  Graph::Builder b(static_cast<int>(plan.n));
  for (std::size_t i = 0; i < plan.blocks.size(); ++i) {
    const GadgetSpec& spec = store.get(plan.blocks[i].id);
    for (auto [u, v] : spec.graph.edges())
      b.add_edge(offset[i] + u, offset[i] + v);
  }
  auto port_vertex = [&](const PortRef& ref) {
    const GadgetSpec& spec = store.get(plan.blocks[ref.block].id);
    auto it = spec.ports.find(ref.port);
    if (it == spec.ports.end())
      throw assembly_error("plan references missing port " + ref.port +
                           " on block " + std::to_string(ref.block));
    return offset[ref.block] + it->second;
  };
  auto add_port_edge = [&](const PlanEdge& e) {
    int u = port_vertex(e.a), v = port_vertex(e.b);
    if (u == v || b.has_edge(u, v))
      throw assembly_error("port collision between block " +
                           std::to_string(e.a.block) + " and block " +
                           std::to_string(e.b.block));
    b.add_edge(u, v);
  };
  for (const auto& e : plan.ring) add_port_edge(e);
  for (const auto& e : plan.chords) add_port_edge(e);
  return b.build();
}

// K3 joined to an independent set: the triangle-join branch's extremal
// graph, order n and size 3n-6.
inline Graph triangle_join_graph(int n) {
  if (n < 4) throw std::domain_error("triangle join needs order >= 4");
  return join(complete_graph(3), empty_graph(n - 3));
}

struct WitnessOptions {
  // Full 3-connectivity re-check is quadratic in order; above this cap only
  // order, size and the local predicate are re-verified.
  int connectivity_check_max_order = 500;
};

// Builds and re-verifies the extremal witness of order n. Verification
// failures abort with diagnostics rather than returning an unverified graph.
inline Graph witness_graph(long long n, const GadgetStore& store,
                           const WitnessOptions& opt = {}) {
  if (n < 8) throw std::domain_error("witnesses exist for n >= 8");
  if (!store.complete())
    throw config_error("gadget store is not populated; derive it first");
  ConstructionPlan plan = build_plan(n);
  Graph g = assemble(plan, store);
  if (g.order() != n)
    throw verification_error("witness order mismatch at n=" + std::to_string(n));
  const long long want = extremal_size(n);
  if (g.size() != want)
    throw verification_error("witness size " + std::to_string(g.size()) +
                             " differs from " + std::to_string(want) +
                             " at n=" + std::to_string(n));
  auto local = is_locally_nonforesty(g);
  if (!local.value)
    throw verification_error(
        "witness not locally nonforesty at n=" + std::to_string(n) +
        ", forest neighborhood at vertex " +
        std::to_string(local.forest_witness.value_or(-1)));
  if (n <= opt.connectivity_check_max_order) {
    auto conn = is_k_connected(g, 3);
    if (!conn.value) {
      std::string cut = "{";
      if (conn.cut)
        for (std::size_t i = 0; i < conn.cut->size(); ++i)
          cut += (i ? "," : "") + std::to_string((*conn.cut)[i]);
      cut += "}";
      throw verification_error("witness not 3-connected at n=" +
                               std::to_string(n) + ", cut " + cut);
    }
  }
  return g;
}

}  // namespace lnf
