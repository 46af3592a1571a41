#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "copnum/graph.hpp"

namespace copnum {

struct LowerBound {
  enum class Reason { Trivial, NotDismantleable, Girth5MinDegree };
  int value = 1;
  Reason reason = Reason::Trivial;
};

const char* to_string(LowerBound::Reason r);

/// max(1, 2 if not dismantleable, min degree if girth is finite and >= 5).
/// Throws DisconnectedGraph.
LowerBound lower_bound(const Graph& g);

/// Which upper-bound rule proved c(G) <= 2.
enum class PruneRule {
  MaxDegreeAtLeastNMinus5,  // max degree >= n-5
  NonPentagonComplement,    // deg(u) >= n-6 and G - N[u] is not a 5-cycle
  LowDegreeOutside,         // deg(u) >= n-6 and some v outside N[u] has deg <= 3
  TenVerticesMaxDegree4,    // n == 10 and max degree >= 4
  NonHexagonComplement,     // deg(u) == max degree == n-7, outside degrees <= 3,
                            // and G - N[u] is not a 6-cycle
};

/// Stable tag used in reports.
const char* to_string(PruneRule r);
std::optional<PruneRule> prune_rule_from_string(const std::string& tag);

struct PruneVerdict {
  enum class Kind { ProvedAtMost2, Unknown };
  Kind kind = Kind::Unknown;
  std::optional<PruneRule> rule;
  /// Vertices the rule's hypotheses were checked on (u, then v if any).
  std::vector<Vertex> witness;

  bool proved() const { return kind == Kind::ProvedAtMost2; }
};

/// First rule (in the PruneRule order) whose hypotheses hold. Throws
/// DisconnectedGraph.
PruneVerdict prune_c_at_most_2(const Graph& g);

/// True iff every hypothesis of the verdict's rule holds for its witness.
bool certificate_holds(const Graph& g, const PruneVerdict& verdict);

/// 3-regular on 10 vertices and every G - N[u] is a 6-cycle.
bool is_petersen_by_property(const Graph& g);

struct EndgameFlags {
  bool small_safe_region = false;  // |S(R)| <= 2 and |N(S(R))| <= 2k-1
  bool low_degree_region = false;  // max degree over S(R) <= 3, at most one of degree 3
};

/// Hypotheses of the two endgame win conditions for a cop-turn state with at
/// least two cops (both flags are false for a single cop).
EndgameFlags endgame_predicates(const Graph& g, std::span<const Vertex> cops, Vertex robber);

}  // namespace copnum
