#pragma once

// Test-side reference implementations. They share nothing with the library
// beyond Graph::order/adjacent and are deliberately naive.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "copnum/graph.hpp"

namespace oracle {

using copnum::Graph;
using copnum::Vertex;

using Matrix = std::vector<std::vector<bool>>;

// graph6 decoding straight from the format definition, one bit at a time.
inline bool decode_graph6(const std::string& s, Matrix& adj) {
  if (s.empty()) return false;
  const int n = static_cast<unsigned char>(s[0]) - 63;
  if (n < 0 || n > 62) return false;
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  if (s.size() != 1 + (bits + 5) / 6) return false;
  std::vector<int> stream;
  for (std::size_t i = 1; i < s.size(); ++i) {
    const int v = static_cast<unsigned char>(s[i]) - 63;
    if (v < 0 || v > 63) return false;
    for (int b = 5; b >= 0; --b) stream.push_back((v >> b) & 1);
  }
  for (std::size_t i = bits; i < stream.size(); ++i) {
    if (stream[i] != 0) return false;
  }
  adj.assign(n, std::vector<bool>(n, false));
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      if (stream[k]) adj[i][j] = adj[j][i] = true;
    }
  }
  return true;
}

inline Matrix matrix_of(const Graph& g) {
  Matrix m(g.order(), std::vector<bool>(g.order(), false));
  for (int i = 0; i < g.order(); ++i)
    for (int j = 0; j < g.order(); ++j) m[i][j] = g.adjacent(i, j);
  return m;
}

// Minimum upper-triangle bit string over all n! relabelings.
inline std::string brute_canonical_key(const Graph& g) {
  const int n = g.order();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  do {
    std::string key;
    key.reserve(n * (n - 1) / 2);
    for (int j = 1; j < n; ++j)
      for (int i = 0; i < j; ++i) key.push_back(g.adjacent(perm[i], perm[j]) ? '1' : '0');
    if (best.empty() || key < best) best = key;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::to_string(n) + ":" + best;
}

inline Graph random_relabel(const Graph& g, std::mt19937& rng) {
  std::vector<Vertex> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<copnum::Edge> edges;
  for (int i = 0; i < g.order(); ++i)
    for (int j = i + 1; j < g.order(); ++j)
      if (g.adjacent(i, j)) edges.emplace_back(perm[i], perm[j]);
  return Graph::from_edges(g.order(), edges);
}

inline Graph random_graph(int n, double p, std::mt19937& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<copnum::Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) edges.emplace_back(i, j);
  return Graph::from_edges(n, edges);
}

inline bool connected(const Graph& g) {
  const int n = g.order();
  std::vector<bool> seen(n, false);
  std::vector<int> stack{0};
  seen[0] = true;
  int count = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w = 0; w < n; ++w) {
      if (g.adjacent(v, w) && !seen[w]) {
        seen[w] = true;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == n;
}

inline Graph random_connected(int n, double p, std::mt19937& rng) {
  while (true) {
    Graph g = random_graph(n, p, rng);
    if (connected(g)) return g;
  }
}

// Cops and robber over ordered cop tuples, solved by Jacobi value iteration.
// After round t every state whose cops capture within t cop moves holds its
// exact distance; unreached states stay at kInf.
struct NaiveGame {
  static constexpr int kInf = std::numeric_limits<int>::max() / 2;
  int n = 0;
  int k = 0;
  std::vector<int> cop_turn;     // [tuple * n + r]
  std::vector<int> robber_turn;  // [tuple * n + r]

  int tuples() const {
    int t = 1;
    for (int i = 0; i < k; ++i) t *= n;
    return t;
  }
  std::vector<int> decode(int t) const {
    std::vector<int> c(k);
    for (int i = 0; i < k; ++i) {
      c[i] = t % n;
      t /= n;
    }
    return c;
  }
  int encode(const std::vector<int>& c) const {
    int t = 0;
    for (int i = k - 1; i >= 0; --i) t = t * n + c[i];
    return t;
  }
  bool cops_win() const {
    for (int t = 0; t < tuples(); ++t) {
      bool all = true;
      for (int r = 0; r < n && all; ++r) all = cop_turn[t * n + r] < kInf;
      if (all) return true;
    }
    return false;
  }
};

inline NaiveGame naive_solve(const Graph& g, int k) {
  NaiveGame game;
  game.n = g.order();
  game.k = k;
  const int n = game.n;
  const int tuples = game.tuples();
  auto closed = [&](int v) {
    std::vector<int> out;
    for (int w = 0; w < n; ++w)
      if (w == v || g.adjacent(v, w)) out.push_back(w);
    return out;
  };
  std::vector<std::vector<int>> nbhd(n);
  for (int v = 0; v < n; ++v) nbhd[v] = closed(v);

  // Successor tuples of every tuple: each cop independently stays or steps.
  std::vector<std::vector<int>> moves(tuples);
  for (int t = 0; t < tuples; ++t) {
    const auto c = game.decode(t);
    std::vector<int> next(k);
    auto rec = [&](auto&& self, int i) -> void {
      if (i == k) {
        moves[t].push_back(game.encode(next));
        return;
      }
      for (int w : nbhd[c[i]]) {
        next[i] = w;
        self(self, i + 1);
      }
    };
    rec(rec, 0);
  }
  auto caught = [&](int t, int r) {
    for (int v : game.decode(t))
      if (v == r) return true;
    return false;
  };

  const int inf = NaiveGame::kInf;
  game.cop_turn.assign(tuples * n, inf);
  game.robber_turn.assign(tuples * n, inf);
  for (int t = 0; t < tuples; ++t)
    for (int r = 0; r < n; ++r)
      if (caught(t, r)) game.cop_turn[t * n + r] = game.robber_turn[t * n + r] = 0;

  bool changed = true;
  while (changed) {
    changed = false;
    auto cop_next = game.cop_turn;
    auto robber_next = game.robber_turn;
    for (int t = 0; t < tuples; ++t) {
      for (int r = 0; r < n; ++r) {
        if (caught(t, r)) continue;
        int best = inf;
        for (int u : moves[t]) best = std::min(best, game.robber_turn[u * n + r]);
        cop_next[t * n + r] = best >= inf ? inf : best + 1;
        int worst = 0;
        for (int w : nbhd[r]) worst = std::max(worst, game.cop_turn[t * n + w]);
        robber_next[t * n + r] = worst;
      }
    }
    if (cop_next != game.cop_turn || robber_next != game.robber_turn) changed = true;
    game.cop_turn = std::move(cop_next);
    game.robber_turn = std::move(robber_next);
  }
  return game;
}

inline int naive_cop_number(const Graph& g, int k_max) {
  for (int k = 1; k <= k_max; ++k)
    if (naive_solve(g, k).cops_win()) return k;
  return k_max + 1;
}

// Repeatedly delete any vertex whose closed neighborhood sits inside another's.
inline bool naive_dismantleable(const Graph& g) {
  std::vector<int> alive(g.order());
  std::iota(alive.begin(), alive.end(), 0);
  while (alive.size() > 1) {
    bool removed = false;
    for (std::size_t a = 0; a < alive.size() && !removed; ++a) {
      for (std::size_t b = 0; b < alive.size() && !removed; ++b) {
        if (a == b) continue;
        const int v = alive[a];
        const int w = alive[b];
        bool inside = true;
        for (int x : alive) {
          const bool in_v = x == v || g.adjacent(v, x);
          const bool in_w = x == w || g.adjacent(w, x);
          if (in_v && !in_w) inside = false;
        }
        if (inside) {
          alive.erase(alive.begin() + static_cast<std::ptrdiff_t>(a));
          removed = true;
        }
      }
    }
    if (!removed) return false;
  }
  return true;
}

}  // namespace oracle
