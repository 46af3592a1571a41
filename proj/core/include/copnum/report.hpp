#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "copnum/properties.hpp"
#include "copnum/solver.hpp"
#include "copnum/structure.hpp"

namespace copnum {

/// One line of the survey report.
struct SurveyRecord {
  std::string graph6;  // canonical encoding
  int n = 0;
  int min_deg = 0;
  int max_deg = 0;
  Girth girth;
  std::optional<int> cop_number;       // exactly one of cop_number / pruned_by
  std::optional<PruneRule> pruned_by;
  std::vector<Vertex> witness;         // with pruned_by
  std::uint64_t states_explored = 0;
  std::uint64_t micros = 0;

  bool operator==(const SurveyRecord&) const = default;
};

/// JSONL object. With `stable` the timing field is written as 0.
nlohmann::json to_json(const SurveyRecord& r, bool stable = false);
/// Throws Error on schema violations (including both or neither verdict).
SurveyRecord record_from_json(const nlohmann::json& j);

/// {"pruned_by": tag, "witness": [...]} or {"pruned_by": null} when Unknown.
nlohmann::json to_json(const PruneVerdict& v);

/// One state record per transcript step: {"step", "cops", "robber", "turn"}.
nlohmann::json to_json(const Transcript& t);

}  // namespace copnum
