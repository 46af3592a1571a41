#include "copnum/solver.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "copnum/properties.hpp"

namespace copnum {

namespace {

constexpr int kMaxTableCops = 8;

// Lexicographic ranking of non-decreasing k-tuples over 0..n-1.
class MultisetRanker {
 public:
  MultisetRanker(int n, int k) : k_(k) {
    // completions[L][a]: non-decreasing tuples of length L with entries in a..n-1.
    std::array<std::array<std::uint64_t, kMaxVertices + 1>, kMaxTableCops + 1> completions{};
    for (int a = 0; a <= n; ++a) completions[0][a] = 1;
    for (int len = 1; len <= k; ++len) {
      completions[len][n] = 0;
      for (int a = n - 1; a >= 0; --a) {
        completions[len][a] = completions[len][a + 1] + completions[len - 1][a];
      }
    }
    total_ = completions[k][0];
    // offset_[i][x]: tuples whose entry i is below x given entry i-1 == 0 baseline.
    for (int i = 0; i < k; ++i) {
      const int rest = k - i - 1;
      std::uint64_t acc = 0;
      for (int x = 0; x <= n; ++x) {
        offset_[i][x] = acc;
        if (x < n) acc += completions[rest][x];
      }
    }
  }

  std::uint64_t total() const { return total_; }

  std::uint32_t rank(const Vertex* sorted) const {
    std::uint64_t r = 0;
    int prev = 0;
    for (int i = 0; i < k_; ++i) {
      r += offset_[i][sorted[i]] - offset_[i][prev];
      prev = sorted[i];
    }
    return static_cast<std::uint32_t>(r);
  }

 private:
  int k_;
  std::uint64_t total_ = 0;
  std::array<std::array<std::uint64_t, kMaxVertices + 1>, kMaxTableCops> offset_{};
};

void sort_small(Vertex* a, int k) {
  for (int i = 1; i < k; ++i) {
    const Vertex x = a[i];
    int j = i - 1;
    while (j >= 0 && a[j] > x) {
      a[j + 1] = a[j];
      --j;
    }
    a[j + 1] = x;
  }
}

VertexSet cop_set(std::span<const Vertex> cops) {
  VertexSet s;
  for (Vertex c : cops) s.insert(c);
  return s;
}

void check_state(const Graph& g, std::span<const Vertex> cops, Vertex robber) {
  for (Vertex c : cops) {
    if (c < 0 || c >= g.order()) throw Error("cop position out of range");
  }
  if (robber < 0 || robber >= g.order()) throw Error("robber position out of range");
}

std::vector<Vertex> sorted_copy(std::span<const Vertex> cops) {
  std::vector<Vertex> v(cops.begin(), cops.end());
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

bool GameState::captured() const {
  return std::find(cops.begin(), cops.end(), robber) != cops.end();
}

std::size_t WinTable::placement_index(std::span<const Vertex> sorted_cops) const {
  if (static_cast<int>(sorted_cops.size()) != k_) throw Error("wrong number of cops");
  for (std::size_t i = 0; i < sorted_cops.size(); ++i) {
    if (sorted_cops[i] < 0 || sorted_cops[i] >= graph_.order()) {
      throw Error("cop position out of range");
    }
    if (i > 0 && sorted_cops[i] < sorted_cops[i - 1]) throw Error("cops must be sorted");
  }
  return MultisetRanker(graph_.order(), k_).rank(sorted_cops.data());
}

std::size_t WinTable::state_index(const GameState& s) const {
  if (s.robber < 0 || s.robber >= graph_.order()) throw Error("robber position out of range");
  return state_index(placement_index(s.cops), s.robber, s.turn);
}

GameState WinTable::state(std::size_t index) const {
  GameState s;
  s.turn = static_cast<Turn>(index % 2);
  const std::size_t rest = index / 2;
  s.robber = static_cast<Vertex>(rest % graph_.order());
  const auto p = placement(rest / graph_.order());
  s.cops.assign(p.begin(), p.end());
  return s;
}

WinTable solve_k(const Graph& g, int k, const SolveLimits& limits) {
  if (k < 1 || k > std::min(limits.max_cops, kMaxTableCops)) {
    throw Error("cop count " + std::to_string(k) + " outside supported range");
  }
  if (!is_connected(g)) throw DisconnectedGraph();

  const int n = g.order();
  const MultisetRanker ranker(n, k);
  const std::uint64_t placements = ranker.total();
  const std::uint64_t states = placements * static_cast<std::uint64_t>(n) * 2;
  if (states > limits.max_states) {
    throw BudgetExceeded("state space of " + std::to_string(states) + " exceeds budget of " +
                         std::to_string(limits.max_states));
  }

  WinTable t(g, k);
  t.stats_.states = states;

  // Placements in lexicographic order, so index == ranker.rank(tuple).
  t.placements_.reserve(placements * k);
  {
    std::vector<Vertex> tuple(k, 0);
    while (true) {
      t.placements_.insert(t.placements_.end(), tuple.begin(), tuple.end());
      int i = k - 1;
      while (i >= 0 && tuple[i] == n - 1) --i;
      if (i < 0) break;
      ++tuple[i];
      for (int j = i + 1; j < k; ++j) tuple[j] = tuple[i];
    }
  }

  // Cop moves between placements. Moves are reversible, so this relation is
  // also the predecessor relation.
  t.move_offsets_.assign(placements + 1, 0);
  t.move_targets_.reserve(placements * 8);
  {
    std::vector<std::uint32_t> stamp(placements, UINT32_MAX);
    std::array<std::array<Vertex, kMaxVertices>, kMaxTableCops> options{};
    std::array<int, kMaxTableCops> option_count{};
    std::array<int, kMaxTableCops> choice{};
    std::array<Vertex, kMaxTableCops> moved{};
    for (std::uint32_t p = 0; p < placements; ++p) {
      const Vertex* c = t.placements_.data() + static_cast<std::size_t>(p) * k;
      for (int i = 0; i < k; ++i) {
        option_count[i] = 0;
        for (Vertex v : g.closed_neighbors(c[i])) options[i][option_count[i]++] = v;
        choice[i] = 0;
      }
      while (true) {
        for (int i = 0; i < k; ++i) moved[i] = options[i][choice[i]];
        sort_small(moved.data(), k);
        const std::uint32_t target = ranker.rank(moved.data());
        if (stamp[target] != p) {
          stamp[target] = p;
          t.move_targets_.push_back(target);
        }
        int i = k - 1;
        while (i >= 0 && ++choice[i] == option_count[i]) choice[i--] = 0;
        if (i < 0) break;
      }
      t.move_offsets_[p + 1] = static_cast<std::uint32_t>(t.move_targets_.size());
    }
  }

  t.win_.assign(states, 0);
  t.dist_.assign(states, WinTable::kNoDist);
  std::vector<std::uint8_t> escapes(states, 0);
  std::vector<std::uint32_t> queue(states);
  std::size_t head = 0;
  std::size_t tail = 0;

  for (std::uint32_t p = 0; p < placements; ++p) {
    const VertexSet occupied = cop_set(t.placement(p));
    for (Vertex r = 0; r < n; ++r) {
      const std::size_t cop_state = t.state_index(p, r, Turn::Cops);
      const std::size_t robber_state = cop_state + 1;
      if (occupied.contains(r)) {
        t.win_[cop_state] = t.win_[robber_state] = 1;
        t.dist_[cop_state] = t.dist_[robber_state] = 0;
        queue[tail++] = static_cast<std::uint32_t>(cop_state);
        queue[tail++] = static_cast<std::uint32_t>(robber_state);
      } else {
        escapes[robber_state] = static_cast<std::uint8_t>(g.degree(r) + 1);
      }
    }
  }

  while (head < tail) {
    const std::uint32_t s = queue[head++];
    const Turn turn = static_cast<Turn>(s & 1U);
    const std::uint32_t rest = s >> 1;
    const Vertex r = static_cast<Vertex>(rest % n);
    const std::uint32_t p = rest / n;
    const std::uint16_t d = t.dist_[s];
    if (turn == Turn::Cops) {
      // The robber stepped here from some r' in N[r].
      for (Vertex from : g.closed_neighbors(r)) {
        const std::size_t pred = t.state_index(p, from, Turn::Robber);
        if (t.win_[pred]) continue;
        if (--escapes[pred] == 0) {
          t.win_[pred] = 1;
          t.dist_[pred] = d;
          queue[tail++] = static_cast<std::uint32_t>(pred);
        }
      }
    } else {
      for (std::uint32_t from : t.cop_moves(p)) {
        const std::size_t pred = t.state_index(from, r, Turn::Cops);
        if (t.win_[pred]) continue;
        t.win_[pred] = 1;
        t.dist_[pred] = static_cast<std::uint16_t>(d + 1);
        queue[tail++] = static_cast<std::uint32_t>(pred);
      }
    }
  }
  t.stats_.queue_pops = head;

  int best_worst = INT32_MAX;
  for (std::uint32_t p = 0; p < placements; ++p) {
    int worst = 0;
    for (Vertex r = 0; r < n && worst != INT32_MAX; ++r) {
      const std::size_t s = t.state_index(p, r, Turn::Cops);
      worst = t.win_[s] ? std::max(worst, static_cast<int>(t.dist_[s])) : INT32_MAX;
    }
    // Placements are lexicographic, so the first minimum is the smallest tuple.
    if (worst < best_worst) {
      best_worst = worst;
      t.opening_ = p;
    }
  }
  return t;
}

bool k_cops_win(const Graph& g, int k, const SolveLimits& limits) {
  return solve_k(g, k, limits).cops_win();
}

int cop_number(const Graph& g, int k_max, SolveStats* stats, const SolveLimits& limits) {
  if (k_max < 1) throw Error("k_max must be at least 1");
  for (int k = 1; k <= k_max; ++k) {
    const WinTable t = solve_k(g, k, limits);
    if (stats != nullptr) {
      stats->states += t.stats().states;
      stats->queue_pops += t.stats().queue_pops;
    }
    if (t.cops_win()) return k;
  }
  throw ExceedsKMax(k_max);
}

VertexSet safe_neighborhood(const Graph& g, std::span<const Vertex> cops, Vertex robber) {
  check_state(g, cops, robber);
  const VertexSet guarded = closed_neighborhood(g, cop_set(cops));
  const VertexSet free = g.vertices() - guarded;
  if (free.contains(robber)) return component_within(g, free, robber);
  VertexSet out;
  for (Vertex w : g.neighbors(robber) & free) {
    if (!out.contains(w)) out |= component_within(g, free, w);
  }
  return out;
}

bool is_trapped(const Graph& g, std::span<const Vertex> cops, Vertex robber) {
  return safe_neighborhood(g, cops, robber).empty();
}

std::vector<Vertex> strategy_move(const WinTable& table, const GameState& s) {
  if (s.turn != Turn::Cops) throw Error("strategy_move needs a cop-turn state");
  if (s.captured()) throw Error("robber already captured");
  const std::size_t index = table.state_index(s);
  if (!table.win(index)) throw NotCopWin("state is not cop-win");

  const std::size_t from = table.placement_index(s.cops);
  std::optional<std::uint32_t> best;
  int best_dist = INT32_MAX;
  for (std::uint32_t to : table.cop_moves(from)) {
    const auto d = table.dist(table.state_index(to, s.robber, Turn::Robber));
    if (!d) continue;
    const bool better =
        *d < best_dist ||
        (*d == best_dist && std::lexicographical_compare(
                                table.placement(to).begin(), table.placement(to).end(),
                                table.placement(*best).begin(), table.placement(*best).end()));
    if (better) {
      best = to;
      best_dist = *d;
    }
  }
  // A winning cop-turn state always has a winning successor.
  const auto p = table.placement(*best);
  return {p.begin(), p.end()};
}

Vertex GreedyRobber::place(const WinTable& table, std::span<const Vertex> cops) const {
  const Graph& g = table.graph();
  const VertexSet occupied = cop_set(cops);
  const std::size_t p = table.placement_index(sorted_copy(cops));
  Vertex best = -1;
  int best_dist = -1;
  for (Vertex r = 0; r < g.order(); ++r) {
    if (occupied.contains(r)) continue;
    const auto d = table.dist(table.state_index(p, r, Turn::Cops));
    const int value = d ? *d : INT32_MAX;
    if (value > best_dist) {
      best_dist = value;
      best = r;
    }
  }
  // Every vertex occupied: the robber has to land on a cop.
  return best >= 0 ? best : occupied.front();
}

Vertex GreedyRobber::move(const WinTable& table, std::span<const Vertex> cops,
                          Vertex robber) const {
  const Graph& g = table.graph();
  const std::size_t p = table.placement_index(sorted_copy(cops));
  Vertex best = robber;
  int best_dist = -1;
  for (Vertex r : g.closed_neighbors(robber)) {
    const auto d = table.dist(table.state_index(p, r, Turn::Cops));
    const int value = d ? *d : INT32_MAX;
    if (value > best_dist) {
      best_dist = value;
      best = r;
    }
  }
  return best;
}

int Transcript::rounds() const {
  return static_cast<int>(std::count_if(steps.begin(), steps.end(), [](const TranscriptStep& s) {
    return s.kind == TranscriptStep::Kind::CopMove;
  }));
}

namespace {

std::string position(const std::vector<Vertex>& cops, Vertex robber) {
  std::ostringstream os;
  os << '<';
  for (std::size_t i = 0; i < cops.size(); ++i) os << (i ? ", " : "") << cops[i];
  os << " | ";
  if (robber >= 0) {
    os << robber;
  } else {
    os << '-';
  }
  os << '>';
  return os.str();
}

}  // namespace

std::string Transcript::render() const {
  std::ostringstream os;
  const TranscriptStep* prev = nullptr;
  for (const auto& step : steps) {
    using Kind = TranscriptStep::Kind;
    switch (step.kind) {
      case Kind::PlaceCops:
        os << "place cops    " << position(step.cops, -1) << '\n';
        break;
      case Kind::PlaceRobber:
        os << "place robber  " << position(step.cops, step.robber) << '\n';
        break;
      case Kind::CopMove:
        os << "cops          " << position(prev->cops, prev->robber) << " -> "
           << position(step.cops, step.robber) << '\n';
        break;
      case Kind::RobberMove:
        os << "robber        " << position(prev->cops, prev->robber) << " -> "
           << position(step.cops, step.robber) << '\n';
        break;
      case Kind::Capture:
        os << "captured      " << position(step.cops, step.robber) << '\n';
        break;
    }
    prev = &step;
  }
  return os.str();
}

Transcript trace_game(const Graph& g, int k, const RobberPolicy& robber,
                      const SolveLimits& limits) {
  const WinTable table = solve_k(g, k, limits);
  if (!table.cops_win()) {
    throw NotCopWin(std::to_string(k) + " cops cannot win on this graph");
  }
  using Kind = TranscriptStep::Kind;
  Transcript t;
  const auto opening = table.placement(*table.best_opening());
  std::vector<Vertex> cops(opening.begin(), opening.end());
  t.steps.push_back({Kind::PlaceCops, cops, -1});
  Vertex r = robber.place(table, cops);
  t.steps.push_back({Kind::PlaceRobber, cops, r});

  const int bound = *table.dist(table.state_index(*table.best_opening(), r, Turn::Cops));
  for (int round = 0;; ++round) {
    if (cop_set(cops).contains(r)) break;
    if (round > bound) throw Error("internal: capture distance not decreasing");
    cops = strategy_move(table, GameState{cops, r, Turn::Cops});
    t.steps.push_back({Kind::CopMove, cops, r});
    if (cop_set(cops).contains(r)) break;
    r = robber.move(table, cops, r);
    t.steps.push_back({Kind::RobberMove, cops, r});
  }
  t.steps.push_back({Kind::Capture, cops, r});
  return t;
}

bool is_no_backtrack_winning(const Graph& g, Vertex v) {
  constexpr int kMaxOrder = 12;
  const int n = g.order();
  if (n > kMaxOrder) {
    throw BudgetExceeded("no-backtrack search limited to " + std::to_string(kMaxOrder) +
                         " vertices");
  }
  if (v < 0 || v >= n) throw Error("start vertex out of range");
  if (!is_connected(g)) throw DisconnectedGraph();

  const std::size_t subsets = std::size_t{1} << n;
  // Robber positions won by the cop at c having visited `visited`.
  std::vector<std::uint16_t> cop_turn(static_cast<std::size_t>(n) * subsets, 0);
  std::vector<std::uint16_t> robber_turn(static_cast<std::size_t>(n) * subsets, 0);
  std::array<std::uint16_t, kMaxOrder> closed{};
  for (int u = 0; u < n; ++u) closed[u] = static_cast<std::uint16_t>(g.closed_neighbors(u).bits());

  // Supersets compare greater, so descending order settles them first.
  for (std::size_t visited = subsets - 1; visited > 0; --visited) {
    const VertexSet vis(static_cast<VertexSet::Bits>(visited));
    for (Vertex c : vis) {
      std::uint16_t base = static_cast<std::uint16_t>(1U << c);
      for (Vertex next : g.neighbors(c) - vis) {
        const std::size_t grown = visited | (std::size_t{1} << next);
        base |= robber_turn[next * subsets + grown];
      }
      std::uint16_t robber_won = static_cast<std::uint16_t>(1U << c);
      while (true) {
        const std::uint16_t cop_won = base | robber_won;
        std::uint16_t updated = static_cast<std::uint16_t>(1U << c);
        for (int r = 0; r < n; ++r) {
          if ((closed[r] & ~cop_won) == 0) updated |= static_cast<std::uint16_t>(1U << r);
        }
        if (updated == robber_won) break;
        robber_won = updated;
      }
      cop_turn[c * subsets + visited] = base | robber_won;
      robber_turn[c * subsets + visited] = robber_won;
    }
  }
  return cop_turn[v * subsets + (std::size_t{1} << v)] == g.vertices().bits();
}

}  // namespace copnum
