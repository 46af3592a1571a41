#include "copnum/properties.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace copnum {

VertexSet closed_neighborhood(const Graph& g, VertexSet s) {
  VertexSet out;
  for (Vertex v : s) out |= g.closed_neighbors(v);
  return out;
}

VertexSet open_neighborhood(const Graph& g, VertexSet s) {
  VertexSet out;
  for (Vertex v : s) out |= g.neighbors(v);
  return out - s;
}

VertexSet private_neighbors(const Graph& g, std::span<const Vertex> u, std::size_t j) {
  if (j >= u.size()) throw std::out_of_range("private_neighbors: index out of range");
  VertexSet others;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (i != j) others |= g.closed_neighbors(u[i]);
  }
  return g.neighbors(u[j]) - others;
}

Girth girth(const Graph& g) {
  const int n = g.order();
  int best = n + 1;
  std::array<int, kMaxVertices> dist{};
  std::array<int, kMaxVertices> parent{};
  std::array<int, kMaxVertices> queue{};
  for (int root = 0; root < n; ++root) {
    dist.fill(-1);
    dist[root] = 0;
    parent[root] = -1;
    int head = 0;
    int tail = 0;
    queue[tail++] = root;
    while (head < tail) {
      const int u = queue[head++];
      // A cycle through root is at least 2*dist(u)+1 long from here on.
      if (2 * dist[u] + 1 >= best) break;
      for (Vertex w : g.neighbors(u)) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue[tail++] = w;
        } else if (w != parent[u]) {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      }
    }
  }
  if (best > n) return std::nullopt;
  return best;
}

std::vector<Edge> dominated_vertices(const Graph& g) {
  std::vector<Edge> out;
  for (int v = 0; v < g.order(); ++v) {
    const VertexSet nv = g.closed_neighbors(v);
    for (int w = 0; w < g.order(); ++w) {
      if (w != v && nv.is_subset_of(g.closed_neighbors(w))) out.emplace_back(v, w);
    }
  }
  return out;
}

std::optional<std::vector<Vertex>> dismantling_order(const Graph& g) {
  if (!is_connected(g)) throw DisconnectedGraph();
  std::vector<Vertex> order;
  VertexSet alive = g.vertices();
  while (alive.size() > 1) {
    bool removed = false;
    for (Vertex v : alive) {
      const VertexSet nv = g.closed_neighbors(v) & alive;
      for (Vertex w : alive) {
        if (w != v && nv.is_subset_of(g.closed_neighbors(w))) {
          alive.erase(v);
          order.push_back(v);
          removed = true;
          break;
        }
      }
      if (removed) break;
    }
    if (!removed) return std::nullopt;
  }
  return order;
}

bool induced_is_cycle(const Graph& g, VertexSet s, int k) {
  if (s.size() != k || k < 3) return false;
  for (Vertex v : s) {
    if ((g.neighbors(v) & s).size() != 2) return false;
  }
  return component_within(g, s, s.front()) == s;
}

}  // namespace copnum
