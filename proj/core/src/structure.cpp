#include "copnum/structure.hpp"

#include <algorithm>

#include "copnum/properties.hpp"
#include "copnum/solver.hpp"

namespace copnum {

const char* to_string(LowerBound::Reason r) {
  switch (r) {
    case LowerBound::Reason::Trivial: return "trivial";
    case LowerBound::Reason::NotDismantleable: return "not-dismantleable";
    case LowerBound::Reason::Girth5MinDegree: return "girth5-min-degree";
  }
  return "unknown";
}

LowerBound lower_bound(const Graph& g) {
  LowerBound lb;
  if (!dismantling_order(g)) lb = {2, LowerBound::Reason::NotDismantleable};
  const Girth gi = girth(g);
  if (gi && *gi >= 5 && g.min_degree() > lb.value) {
    lb = {g.min_degree(), LowerBound::Reason::Girth5MinDegree};
  }
  return lb;
}

namespace {

constexpr PruneRule kAllRules[] = {
    PruneRule::MaxDegreeAtLeastNMinus5, PruneRule::NonPentagonComplement,
    PruneRule::LowDegreeOutside, PruneRule::TenVerticesMaxDegree4,
    PruneRule::NonHexagonComplement,
};

VertexSet outside(const Graph& g, Vertex u) { return g.vertices() - g.closed_neighbors(u); }

bool max_degree_rule(const Graph& g, Vertex u) { return g.degree(u) >= g.order() - 5; }

bool pentagon_rule(const Graph& g, Vertex u) {
  return g.degree(u) >= g.order() - 6 && !induced_is_cycle(g, outside(g, u), 5);
}

bool low_degree_rule(const Graph& g, Vertex u, Vertex v) {
  return g.degree(u) >= g.order() - 6 && outside(g, u).contains(v) && g.degree(v) <= 3;
}

bool ten_vertex_rule(const Graph& g, Vertex u) { return g.order() == 10 && g.degree(u) >= 4; }

bool hexagon_rule(const Graph& g, Vertex u) {
  const int n = g.order();
  if (g.degree(u) != n - 7 || g.max_degree() != n - 7) return false;
  const VertexSet rest = outside(g, u);
  for (Vertex v : rest) {
    if (g.degree(v) > 3) return false;
  }
  return !induced_is_cycle(g, rest, 6);
}

PruneVerdict proved(PruneRule rule, std::vector<Vertex> witness) {
  return {PruneVerdict::Kind::ProvedAtMost2, rule, std::move(witness)};
}

}  // namespace

const char* to_string(PruneRule r) {
  switch (r) {
    case PruneRule::MaxDegreeAtLeastNMinus5: return "max-degree-n-5";
    case PruneRule::NonPentagonComplement: return "non-5-cycle-complement";
    case PruneRule::LowDegreeOutside: return "low-degree-outside";
    case PruneRule::TenVerticesMaxDegree4: return "order-10-max-degree-4";
    case PruneRule::NonHexagonComplement: return "non-6-cycle-complement";
  }
  return "unknown";
}

std::optional<PruneRule> prune_rule_from_string(const std::string& tag) {
  for (PruneRule r : kAllRules) {
    if (tag == to_string(r)) return r;
  }
  return std::nullopt;
}

PruneVerdict prune_c_at_most_2(const Graph& g) {
  if (!is_connected(g)) throw DisconnectedGraph();
  const int n = g.order();
  const VertexSet all = g.vertices();

  for (Vertex u : all) {
    if (max_degree_rule(g, u)) return proved(PruneRule::MaxDegreeAtLeastNMinus5, {u});
  }
  for (Vertex u : all) {
    if (pentagon_rule(g, u)) return proved(PruneRule::NonPentagonComplement, {u});
  }
  for (Vertex u : all) {
    if (g.degree(u) < n - 6) continue;
    for (Vertex v : outside(g, u)) {
      if (low_degree_rule(g, u, v)) return proved(PruneRule::LowDegreeOutside, {u, v});
    }
  }
  for (Vertex u : all) {
    if (ten_vertex_rule(g, u)) return proved(PruneRule::TenVerticesMaxDegree4, {u});
  }
  for (Vertex u : all) {
    if (hexagon_rule(g, u)) return proved(PruneRule::NonHexagonComplement, {u});
  }
  return {};
}

bool certificate_holds(const Graph& g, const PruneVerdict& verdict) {
  if (!verdict.proved() || !verdict.rule) return false;
  const auto& w = verdict.witness;
  for (Vertex x : w) {
    if (x < 0 || x >= g.order()) return false;
  }
  switch (*verdict.rule) {
    case PruneRule::MaxDegreeAtLeastNMinus5: return w.size() == 1 && max_degree_rule(g, w[0]);
    case PruneRule::NonPentagonComplement: return w.size() == 1 && pentagon_rule(g, w[0]);
    case PruneRule::LowDegreeOutside: return w.size() == 2 && low_degree_rule(g, w[0], w[1]);
    case PruneRule::TenVerticesMaxDegree4: return w.size() == 1 && ten_vertex_rule(g, w[0]);
    case PruneRule::NonHexagonComplement: return w.size() == 1 && hexagon_rule(g, w[0]);
  }
  return false;
}

bool is_petersen_by_property(const Graph& g) {
  if (g.order() != 10) return false;
  for (Vertex u : g.vertices()) {
    if (g.degree(u) != 3) return false;
  }
  for (Vertex u : g.vertices()) {
    if (!induced_is_cycle(g, outside(g, u), 6)) return false;
  }
  return true;
}

EndgameFlags endgame_predicates(const Graph& g, std::span<const Vertex> cops, Vertex robber) {
  EndgameFlags flags;
  const int k = static_cast<int>(cops.size());
  if (k < 2) return flags;
  const VertexSet safe = safe_neighborhood(g, cops, robber);
  flags.small_safe_region =
      safe.size() <= 2 && open_neighborhood(g, safe).size() <= 2 * k - 1;
  int max_deg = 0;
  int degree3 = 0;
  for (Vertex v : safe) {
    max_deg = std::max(max_deg, g.degree(v));
    if (g.degree(v) == 3) ++degree3;
  }
  flags.low_degree_region = max_deg <= 3 && degree3 <= 1;
  return flags;
}

}  // namespace copnum
