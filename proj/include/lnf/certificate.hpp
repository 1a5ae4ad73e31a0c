#pragma once

#include <optional>
#include <string>

#include <json.hpp>

namespace lnf {

inline constexpr int kSchemaVersion = 1;

// Machine-checkable result record: either a witness exists (and re-verifies)
// or a constrained search space was exhausted. Timing is isolated in its own
// block so comparisons can strip it.
struct Certificate {
  std::string kind;
  nlohmann::json constraints = nlohmann::json::object();
  std::string verdict;
  std::optional<std::string> witness_graph6;
  nlohmann::json counts = nlohmann::json::object();
  nlohmann::json details = nlohmann::json::array();
  double elapsed_seconds = 0.0;

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["schema_version"] = kSchemaVersion;
    j["kind"] = kind;
    j["constraints"] = constraints;
    j["verdict"] = verdict;
    if (witness_graph6) j["witness_graph6"] = *witness_graph6;
    j["counts"] = counts;
    j["details"] = details;
    j["timing"] = {{"elapsed_seconds", elapsed_seconds}};
    return j;
  }
};

}  // namespace lnf
