#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "copnum/graph.hpp"

namespace copnum {

enum class Turn : std::uint8_t { Cops = 0, Robber = 1 };

/// One node of the game digraph: cops (sorted, interchangeable), robber, mover.
struct GameState {
  std::vector<Vertex> cops;
  Vertex robber = 0;
  Turn turn = Turn::Cops;

  bool captured() const;
  bool operator==(const GameState&) const = default;
};

struct SolveStats {
  std::uint64_t states = 0;      // states enumerated
  std::uint64_t queue_pops = 0;  // retrograde queue pops
};

struct SolveLimits {
  int max_cops = 6;
  std::uint64_t max_states = std::uint64_t{1} << 26;
};

/// Optimal-play value function for k cops on one graph. Immutable once built.
class WinTable {
 public:
  static constexpr std::uint16_t kNoDist = 0xFFFF;

  const Graph& graph() const { return graph_; }
  int cops() const { return k_; }
  const SolveStats& stats() const { return stats_; }

  /// Number of sorted cop tuples (multisets of size k).
  std::size_t placement_count() const { return placements_.size() / k_; }
  std::span<const Vertex> placement(std::size_t index) const {
    return {placements_.data() + index * k_, static_cast<std::size_t>(k_)};
  }
  std::size_t placement_index(std::span<const Vertex> sorted_cops) const;
  /// Placements reachable in one cop move (each cop moves or stays).
  std::span<const std::uint32_t> cop_moves(std::size_t placement) const {
    return {move_targets_.data() + move_offsets_[placement],
            move_targets_.data() + move_offsets_[placement + 1]};
  }

  std::size_t state_count() const { return win_.size(); }
  std::size_t state_index(std::size_t placement, Vertex robber, Turn turn) const {
    return (placement * graph_.order() + robber) * 2 + static_cast<std::size_t>(turn);
  }
  std::size_t state_index(const GameState& s) const;
  GameState state(std::size_t index) const;

  bool win(std::size_t index) const { return win_[index] != 0; }
  bool win(const GameState& s) const { return win(state_index(s)); }
  /// Capture distance in cop moves; nullopt for robber-win states.
  std::optional<int> dist(std::size_t index) const {
    if (!win_[index]) return std::nullopt;
    return dist_[index];
  }
  std::optional<int> dist(const GameState& s) const { return dist(state_index(s)); }

  /// Some placement beats every robber placement.
  bool cops_win() const { return opening_.has_value(); }
  /// Winning placement minimizing the worst-case capture distance; ties go
  /// to the lexicographically smallest tuple.
  std::optional<std::size_t> best_opening() const { return opening_; }

 private:
  friend WinTable solve_k(const Graph& g, int k, const SolveLimits& limits);
  WinTable(const Graph& g, int k) : graph_(g), k_(k) {}

  Graph graph_;
  int k_;
  std::vector<Vertex> placements_;
  std::vector<std::uint32_t> move_offsets_;
  std::vector<std::uint32_t> move_targets_;
  std::vector<std::uint8_t> win_;
  std::vector<std::uint16_t> dist_;
  std::optional<std::size_t> opening_;
  SolveStats stats_;
};

/// Backward induction from capture states. Throws DisconnectedGraph,
/// BudgetExceeded, or Error for k outside 1..limits.max_cops.
WinTable solve_k(const Graph& g, int k, const SolveLimits& limits = {});

bool k_cops_win(const Graph& g, int k, const SolveLimits& limits = {});

/// Smallest k <= k_max with a cop win. Throws ExceedsKMax.
int cop_number(const Graph& g, int k_max, SolveStats* stats = nullptr,
               const SolveLimits& limits = {});

/// Component of G - N[C] holding the robber. When the robber already stands in
/// N[C], the union of the components of G - N[C] it can step into.
VertexSet safe_neighborhood(const Graph& g, std::span<const Vertex> cops, Vertex robber);

/// Safe neighborhood is empty: the next cop move captures.
bool is_trapped(const Graph& g, std::span<const Vertex> cops, Vertex robber);

/// Destinations (sorted) of the optimal cop move from a winning cop-turn state:
/// minimal capture distance, lexicographically smallest on ties.
std::vector<Vertex> strategy_move(const WinTable& table, const GameState& s);

class RobberPolicy {
 public:
  virtual ~RobberPolicy() = default;
  virtual Vertex place(const WinTable& table, std::span<const Vertex> cops) const = 0;
  virtual Vertex move(const WinTable& table, std::span<const Vertex> cops,
                      Vertex robber) const = 0;
};

/// Maximizes the remaining capture distance; smallest vertex on ties.
class GreedyRobber final : public RobberPolicy {
 public:
  Vertex place(const WinTable& table, std::span<const Vertex> cops) const override;
  Vertex move(const WinTable& table, std::span<const Vertex> cops,
              Vertex robber) const override;
};

struct TranscriptStep {
  enum class Kind { PlaceCops, PlaceRobber, CopMove, RobberMove, Capture };
  Kind kind;
  std::vector<Vertex> cops;  // positions after the step
  Vertex robber = -1;        // -1 before the robber is placed
};

struct Transcript {
  std::vector<TranscriptStep> steps;

  /// Cop move rounds played.
  int rounds() const;
  /// Arrow notation, one move per line.
  std::string render() const;
};

/// Optimal cops against `robber`. Throws NotCopWin if k cops lose.
Transcript trace_game(const Graph& g, int k, const RobberPolicy& robber,
                      const SolveLimits& limits = {});

/// One cop starting at v wins without ever entering a vertex it already
/// occupied (staying put is allowed). Throws BudgetExceeded for n > 12.
bool is_no_backtrack_winning(const Graph& g, Vertex v);

}  // namespace copnum
