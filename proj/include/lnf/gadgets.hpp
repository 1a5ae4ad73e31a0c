#pragma once

#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "lnf/errors.hpp"
#include "lnf/graph.hpp"
#include "lnf/io.hpp"

namespace lnf {

// Ring-assembly blocks. A is the K4 block; the other four substitute for one
// A block to reach orders not divisible by 4 and are produced by the gadget
// search, never hard-coded.
enum class GadgetId { A, B1, C1, D1, D2 };

inline const char* to_string(GadgetId id) {
  switch (id) {
    case GadgetId::A: return "A";
    case GadgetId::B1: return "B1";
    case GadgetId::C1: return "C1";
    case GadgetId::D1: return "D1";
    case GadgetId::D2: return "D2";
  }
  return "?";
}

inline std::optional<GadgetId> gadget_id_from(std::string_view s) {
  if (s == "A") return GadgetId::A;
  if (s == "B1") return GadgetId::B1;
  if (s == "C1") return GadgetId::C1;
  if (s == "D1") return GadgetId::D1;
  if (s == "D2") return GadgetId::D2;
  return std::nullopt;
}

// A small labeled block graph with designated port vertices. Ring edges use
// y and z, chords use w (and x for D2).
struct GadgetSpec {
  GadgetId id = GadgetId::A;
  Graph graph;
  std::map<std::string, int> ports;
};

struct GadgetRequirement {
  GadgetId id = GadgetId::A;
  int order = 0;
  long long size = 0;
  std::vector<std::string> ports;
  std::vector<int> validation_ks = {1, 2, 3, 4};
};

// Orders and sizes are forced by the size arithmetic of the assembled
// graphs: 15k + 2r (+1) minus ring and chord counts minus the A blocks.
inline GadgetRequirement requirement_for(GadgetId id) {
  switch (id) {
    case GadgetId::A: return {id, 4, 6, {"x", "y", "z", "w"}};
    case GadgetId::B1: return {id, 5, 9, {"y", "z", "w"}};
    case GadgetId::C1: return {id, 6, 11, {"y", "z", "w"}};
    case GadgetId::D1: return {id, 7, 13, {"y", "z", "w"}};
    case GadgetId::D2: return {id, 7, 12, {"x", "y", "z", "w"}};
  }
  throw std::invalid_argument("unknown gadget id");
}

// Residue classes (mod 8) whose construction uses the given block.
inline std::vector<int> residues_for(GadgetId id) {
  switch (id) {
    case GadgetId::A: return {0, 4};
    case GadgetId::B1: return {1, 5};
    case GadgetId::C1: return {2, 6};
    case GadgetId::D1: return {3};
    case GadgetId::D2: return {7};
  }
  throw std::invalid_argument("unknown gadget id");
}

inline GadgetSpec a_gadget() {
  GadgetSpec s;
  s.id = GadgetId::A;
  s.graph = complete_graph(4);
  s.ports = {{"x", 0}, {"y", 1}, {"z", 2}, {"w", 3}};
  return s;
}

inline void validate_spec(const GadgetSpec& s) {
  GadgetRequirement req = requirement_for(s.id);
  const std::string name = to_string(s.id);
  if (s.graph.order() != req.order)
    throw config_error("gadget " + name + " has order " +
                       std::to_string(s.graph.order()) + ", required " +
                       std::to_string(req.order));
  if (s.graph.size() != req.size)
    throw config_error("gadget " + name + " has size " +
                       std::to_string(s.graph.size()) + ", required " +
                       std::to_string(req.size));
  std::set<int> used;
  for (const auto& port : req.ports) {
    auto it = s.ports.find(port);
    if (it == s.ports.end())
      throw config_error("gadget " + name + " lacks port " + port);
    if (it->second < 0 || it->second >= s.graph.order())
      throw config_error("gadget " + name + " port " + port + " out of range");
    if (!used.insert(it->second).second)
      throw config_error("gadget " + name + " has colliding ports");
  }
}

// The derived blocks B1, C1, D1, D2. The A block is built in.
struct GadgetStore {
  std::map<GadgetId, GadgetSpec> entries;

  bool empty() const { return entries.empty(); }

  bool complete() const {
    for (GadgetId id :
         {GadgetId::B1, GadgetId::C1, GadgetId::D1, GadgetId::D2})
      if (!entries.count(id)) return false;
    return true;
  }

  const GadgetSpec& get(GadgetId id) const {
    if (id == GadgetId::A) {
      static const GadgetSpec a = a_gadget();
      return a;
    }
    auto it = entries.find(id);
    if (it == entries.end())
      throw config_error(std::string("gadget store has no entry for ") +
                         to_string(id));
    return it->second;
  }

  void validate() const {
    for (GadgetId id :
         {GadgetId::B1, GadgetId::C1, GadgetId::D1, GadgetId::D2})
      validate_spec(get(id));
  }

  nlohmann::json to_json() const {
    nlohmann::json g = nlohmann::json::object();
    for (const auto& [id, spec] : entries) {
      nlohmann::json ports = nlohmann::json::object();
      for (const auto& [name, v] : spec.ports) ports[name] = v;
      g[to_string(id)] = {{"graph6", emit_graph6(spec.graph)},
                          {"ports", ports}};
    }
    return {{"schema_version", 1}, {"gadgets", g}};
  }

  static GadgetStore from_json(const nlohmann::json& j) {
    GadgetStore store;
    if (!j.is_object() || !j.contains("gadgets") || !j["gadgets"].is_object())
      throw config_error("gadget store JSON lacks a gadgets object");
    for (const auto& [key, val] : j["gadgets"].items()) {
      auto id = gadget_id_from(key);
      if (!id) throw config_error("unknown gadget id " + key);
      GadgetSpec spec;
      spec.id = *id;
      if (!val.contains("graph6") || !val["graph6"].is_string())
        throw config_error("gadget " + key + " lacks a graph6 string");
      spec.graph = parse_graph6(val["graph6"].get<std::string>());
      if (!val.contains("ports") || !val["ports"].is_object())
        throw config_error("gadget " + key + " lacks a ports object");
      for (const auto& [name, idx] : val["ports"].items())
        spec.ports[name] = idx.get<int>();
      store.entries[*id] = std::move(spec);
    }
    return store;
  }
};

inline GadgetStore load_gadget_store(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw config_error("cannot open gadget store " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(buf.str());
  } catch (const nlohmann::json::parse_error& e) {
    throw parse_error(std::string("gadget store JSON: ") + e.what(),
                      e.byte > 0 ? e.byte - 1 : 0);
  }
  return GadgetStore::from_json(j);
}

inline void save_gadget_store(const GadgetStore& store, const std::string& path) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw config_error("cannot write gadget store " + path);
  out << store.to_json().dump(2) << "\n";
}

}  // namespace lnf
