#include "copnum/report.hpp"

namespace copnum {

nlohmann::json to_json(const SurveyRecord& r, bool stable) {
  nlohmann::json j;
  j["graph6"] = r.graph6;
  j["n"] = r.n;
  j["min_deg"] = r.min_deg;
  j["max_deg"] = r.max_deg;
  if (r.girth) {
    j["girth"] = *r.girth;
  } else {
    j["girth"] = "inf";
  }
  if (r.cop_number) {
    j["cop_number"] = *r.cop_number;
  } else if (r.pruned_by) {
    j["pruned_by"] = to_string(*r.pruned_by);
    j["witness"] = r.witness;
  }
  j["states_explored"] = r.states_explored;
  j["micros"] = stable ? 0 : r.micros;
  return j;
}

SurveyRecord record_from_json(const nlohmann::json& j) {
  try {
    SurveyRecord r;
    r.graph6 = j.at("graph6").get<std::string>();
    r.n = j.at("n").get<int>();
    r.min_deg = j.at("min_deg").get<int>();
    r.max_deg = j.at("max_deg").get<int>();
    const auto& gi = j.at("girth");
    if (gi.is_string()) {
      if (gi.get<std::string>() != "inf") throw Error("girth must be an integer or \"inf\"");
    } else {
      r.girth = gi.get<int>();
    }
    const bool has_cop = j.contains("cop_number");
    const bool has_prune = j.contains("pruned_by");
    if (has_cop == has_prune) throw Error("record needs exactly one of cop_number / pruned_by");
    if (has_cop) {
      r.cop_number = j.at("cop_number").get<int>();
    } else {
      const auto tag = j.at("pruned_by").get<std::string>();
      r.pruned_by = prune_rule_from_string(tag);
      if (!r.pruned_by) throw Error("unknown prune tag: " + tag);
      r.witness = j.at("witness").get<std::vector<Vertex>>();
    }
    r.states_explored = j.at("states_explored").get<std::uint64_t>();
    r.micros = j.at("micros").get<std::uint64_t>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed survey record: ") + e.what());
  }
}

nlohmann::json to_json(const PruneVerdict& v) {
  nlohmann::json j;
  if (v.proved()) {
    j["pruned_by"] = to_string(*v.rule);
    j["witness"] = v.witness;
  } else {
    j["pruned_by"] = nullptr;
  }
  return j;
}

nlohmann::json to_json(const Transcript& t) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& s : t.steps) {
    using Kind = TranscriptStep::Kind;
    const char* step = "";
    const char* turn = "";
    switch (s.kind) {
      case Kind::PlaceCops: step = "place_cops"; turn = "robber"; break;
      case Kind::PlaceRobber: step = "place_robber"; turn = "cops"; break;
      case Kind::CopMove: step = "cop_move"; turn = "robber"; break;
      case Kind::RobberMove: step = "robber_move"; turn = "cops"; break;
      case Kind::Capture: step = "capture"; turn = "none"; break;
    }
    nlohmann::json rec;
    rec["step"] = step;
    rec["cops"] = s.cops;
    if (s.robber >= 0) {
      rec["robber"] = s.robber;
    } else {
      rec["robber"] = nullptr;
    }
    rec["turn"] = turn;
    out.push_back(std::move(rec));
  }
  return out;
}

}  // namespace copnum
